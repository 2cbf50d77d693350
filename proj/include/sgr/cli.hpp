#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sgr/classify.hpp"
#include "sgr/enumerate.hpp"
#include "sgr/errors.hpp"
#include "sgr/james.hpp"
#include "sgr/kocheck.hpp"
#include "sgr/reality.hpp"
#include "sgr/serialize.hpp"
#include "sgr/verify.hpp"
#include "sgr/weyl.hpp"

namespace sgr::cli {

// Exit-code contract: 0 success, 1 verification failure, 2 usage error,
// 3 out-of-domain (hypothesis violation).
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

namespace detail {

inline std::vector<int> parse_coeff_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError("coefficients", "'" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw CLI::ValidationError("coefficients", "empty coefficient list");
    return out;
}

inline AlgebraFamily parse_algebra_family(const std::string& s) {
    if (s == "A") return AlgebraFamily::A;
    if (s == "B") return AlgebraFamily::B;
    if (s == "C") return AlgebraFamily::C;
    if (s == "D") return AlgebraFamily::D;
    throw CLI::ValidationError("algebra", "expected one of A, B, C, D");
}

inline GroupFamily parse_group_family(const std::string& s) {
    if (s == "SO") return GroupFamily::SO;
    if (s == "SU") return GroupFamily::SU;
    if (s == "Sp") return GroupFamily::Sp;
    throw CLI::ValidationError("family", "expected one of SO, SU, Sp");
}

inline SphereFamily gap_kind_family(const std::string& s) {
    if (s == "j2") return SphereFamily::Complex;
    if (s == "j4") return SphereFamily::Quaternionic;
    return SphereFamily::Real;
}

struct NRange {
    long long lo = 0, hi = 0;
};

inline NRange parse_n_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) throw CLI::ValidationError("n-range", "expected a..b");
    try {
        NRange r;
        r.lo = std::stoll(text.substr(0, pos));
        r.hi = std::stoll(text.substr(pos + 2));
        if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument(text);
        return r;
    } catch (const std::exception&) {
        throw CLI::ValidationError("n-range", "expected a..b with 1 <= a <= b");
    }
}

inline std::size_t enumeration_cap_from_env() {
    if (const char* cap = std::getenv("SGR_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(cap, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

inline std::string coeffs_csv(const std::vector<int>& coeffs, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(coeffs[i]);
    }
    return s;
}

inline json james_to_json(const std::string& kind, std::uint64_t r, const FactoredInteger& f) {
    json obj;
    obj["kind"] = kind;
    obj["r"] = r;
    obj["factors"] = factored_to_json(f);
    if (f.log10() > 40.0) {
        obj["approx_log10"] = static_cast<long long>(f.log10());
    } else {
        obj["decimal"] = f.value().str();
    }
    return obj;
}

inline void print_verdict_human(std::ostream& out, const ReductionQuery& q, const ReductionVerdict& v) {
    out << (v.reducible ? "YES" : "NO");
    if (v.reduction_case) out << " (case " << case_letter(*v.reduction_case) << ")";
    out << ": " << q.target.name() << (v.reducible ? " reduces to " : " does not reduce to ")
        << q.source.name() << "\n";
    if (v.trace) {
        out << "  m = " << v.trace->m << ", d = " << v.trace->d << ", modulus = "
            << v.trace->modulus.display_string() << ", remainder = " << v.trace->remainder << "\n";
    }
    if (!v.reducible && !v.reason.empty()) out << "  " << v.reason << "\n";
    for (const auto& hom : v.homs) {
        out << "  hom " << hom_kind_name(hom.kind) << ":";
        for (std::size_t i = 0; i < hom.decomposition.size(); ++i) {
            out << (i ? " + " : " ") << hom.decomposition[i].label << "(" << hom.decomposition[i].dim
                << ")";
        }
        out << "\n";
    }
}

} // namespace detail

/**
 * Runs one CLI invocation. argv[0] is the program name. All output goes to
 * the supplied streams, so invocations are testable in-process; identical
 * argv produces byte-identical output.
 */
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of sphere-bundle structure reductions: James and "
                 "Hurwitz-Radon numbers, Weyl dimensions, reality types, and the "
                 "reduction decision procedure."};
    app.require_subcommand(1);
    std::string format = "human";

    // -- james ---------------------------------------------------------------
    auto* cmd_james = app.add_subcommand("james", "Hurwitz-Radon / James numbers a(r), b(r), c(r)");
    std::string james_kind;
    std::uint64_t james_r = 0;
    cmd_james->add_option("kind", james_kind, "a | b | c")->required()->check(CLI::IsMember({"a", "b", "c"}));
    cmd_james->add_option("r", james_r, "argument r >= 1")->required();
    cmd_james->add_option("--format", format, "human | json")->check(CLI::IsMember({"human", "json"}));

    // -- gap -----------------------------------------------------------------
    auto* cmd_gap = app.add_subcommand("gap", "gap functions j(n), j2(n), j4(n)");
    std::string gap_kind;
    std::uint64_t gap_n = 0;
    cmd_gap->add_option("kind", gap_kind, "j | j2 | j4")->required()->check(CLI::IsMember({"j", "j2", "j4"}));
    cmd_gap->add_option("n", gap_n, "argument n >= 1")->required();
    cmd_gap->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    // -- weyl-dim ------------------------------------------------------------
    auto* cmd_weyl = app.add_subcommand("weyl-dim", "irreducible dimension by the Weyl formula");
    std::string weyl_family, weyl_coeffs, weyl_method = "generic";
    int weyl_rank = 0;
    cmd_weyl->add_option("algebra", weyl_family, "A | B | C | D")->required()
        ->check(CLI::IsMember({"A", "B", "C", "D"}));
    cmd_weyl->add_option("rank", weyl_rank, "rank l >= 1")->required();
    cmd_weyl->add_option("coeffs", weyl_coeffs, "m1,...,ml")->required();
    cmd_weyl->add_option("--method", weyl_method, "generic | specialized | both")
        ->check(CLI::IsMember({"generic", "specialized", "both"}));
    cmd_weyl->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    // -- real-dim ------------------------------------------------------------
    auto* cmd_real = app.add_subcommand("real-dim", "real dimension and reality type");
    std::string real_family, real_coeffs;
    int real_k = 0;
    cmd_real->add_option("group", real_family, "SO | SU | Sp")->required()
        ->check(CLI::IsMember({"SO", "SU", "Sp"}));
    cmd_real->add_option("k", real_k, "group size")->required();
    cmd_real->add_option("coeffs", real_coeffs, "m1,...,ml")->required();
    cmd_real->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    // -- enumerate -----------------------------------------------------------
    auto* cmd_enum = app.add_subcommand("enumerate", "dominant weights below a dimension bound");
    std::string enum_family, enum_bound, enum_filter;
    int enum_rank = 0;
    cmd_enum->add_option("algebra", enum_family, "A | B | C | D")->required()
        ->check(CLI::IsMember({"A", "B", "C", "D"}));
    cmd_enum->add_option("rank", enum_rank, "rank l >= 1")->required();
    cmd_enum->add_option("--max-dim", enum_bound, "complex dimension bound")->required();
    cmd_enum->add_option("--filter", enum_filter, "SO | SU | Sp descent filter")
        ->check(CLI::IsMember({"SO", "SU", "Sp"}));
    cmd_enum->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

    // -- classify ------------------------------------------------------------
    auto* cmd_classify = app.add_subcommand("classify", "decide a structure-group reduction");
    std::string cls_target, cls_source;
    int cls_n = 0, cls_k = 0;
    cmd_classify->add_option("--target", cls_target, "SO | SU | Sp")->required()
        ->check(CLI::IsMember({"SO", "SU", "Sp"}));
    cmd_classify->add_option("--n", cls_n, "target size n")->required();
    cmd_classify->add_option("--source", cls_source, "SO | SU | Sp")->required()
        ->check(CLI::IsMember({"SO", "SU", "Sp"}));
    cmd_classify->add_option("--k", cls_k, "source size k")->required();
    cmd_classify->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    // -- min-k ---------------------------------------------------------------
    auto* cmd_mink = app.add_subcommand("min-k", "least source size admitting a reduction");
    std::string mink_target, mink_source;
    int mink_n = 0;
    cmd_mink->add_option("--target", mink_target, "SO | SU | Sp")->required()
        ->check(CLI::IsMember({"SO", "SU", "Sp"}));
    cmd_mink->add_option("--n", mink_n, "target size n")->required();
    cmd_mink->add_option("--source", mink_source, "SO | SU | Sp")->required()
        ->check(CLI::IsMember({"SO", "SU", "Sp"}));
    cmd_mink->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    // -- ko-check ------------------------------------------------------------
    auto* cmd_ko = app.add_subcommand("ko-check", "connective KO order data and fixed-generator test");
    std::uint64_t ko_n = 0, ko_k = 0;
    cmd_ko->add_option("--n", ko_n, "odd n")->required();
    cmd_ko->add_option("--k", ko_k, "1 <= k <= n")->required();
    cmd_ko->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    // -- verify --------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run a verification battery");
    std::string verify_which;
    cmd_verify->add_option("battery", verify_which, "prop51 | prop53 | lemma-sp3 | equiv-sweep")
        ->required()
        ->check(CLI::IsMember({"prop51", "prop53", "lemma-sp3", "equiv-sweep"}));

    // -- atlas ---------------------------------------------------------------
    auto* cmd_atlas = app.add_subcommand("atlas", "tabulate verdicts over a range of n");
    std::string atlas_target, atlas_source, atlas_range;
    cmd_atlas->add_option("--target", atlas_target, "SO | SU | Sp")->required()
        ->check(CLI::IsMember({"SO", "SU", "Sp"}));
    cmd_atlas->add_option("--source", atlas_source, "SO | SU | Sp")->required()
        ->check(CLI::IsMember({"SO", "SU", "Sp"}));
    cmd_atlas->add_option("--n-range", atlas_range, "a..b")->required();
    cmd_atlas->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_james->parsed()) {
            FactoredInteger value = james_kind == "a"   ? hurwitz_radon_a(james_r)
                                    : james_kind == "b" ? james_b(james_r)
                                                        : james_c(james_r);
            if (format == "json") {
                out << detail::james_to_json(james_kind, james_r, value).dump() << "\n";
            } else {
                out << value.display_string() << "\n";
            }
            return kExitOk;
        }

        if (cmd_gap->parsed()) {
            std::uint64_t gap = gap_kind == "j" ? j_real(gap_n)
                                                : j_gap(gap_n, detail::gap_kind_family(gap_kind));
            if (format == "json") {
                out << json{{"kind", gap_kind}, {"n", gap_n}, {"gap", gap}}.dump() << "\n";
            } else {
                out << gap << "\n";
            }
            return kExitOk;
        }

        if (cmd_weyl->parsed()) {
            AlgebraType alg(detail::parse_algebra_family(weyl_family), weyl_rank);
            DominantWeight w(alg, detail::parse_coeff_list(weyl_coeffs));
            std::optional<BigInt> g, s;
            if (weyl_method != "specialized") g = dim_generic(w);
            if (weyl_method != "generic") s = dim_specialized(w);
            if (format == "json") {
                json obj{{"algebra", weyl_family}, {"rank", weyl_rank}, {"coeffs", w.coeffs}};
                if (g) obj["generic"] = g->str();
                if (s) obj["specialized"] = s->str();
                out << obj.dump() << "\n";
            } else {
                if (g) out << *g;
                if (g && s) out << " ";
                if (s) out << *s;
                out << "\n";
            }
            if (g && s && *g != *s) {
                err << "verification failure: generic " << *g << " != specialized " << *s << "\n";
                return kExitVerificationFailure;
            }
            return kExitOk;
        }

        if (cmd_real->parsed()) {
            GroupDescriptor grp(detail::parse_group_family(real_family), real_k);
            DominantWeight w(group_algebra(grp), detail::parse_coeff_list(real_coeffs));
            RealIrrepInfo info = real_irrep_info(grp, w);
            if (format == "json") {
                out << json{{"group", grp.name()},
                            {"coeffs", w.coeffs},
                            {"real_dim", info.real_dim.str()},
                            {"reality", reality_name(info.reality)},
                            {"lower_bound", info.real_dim_is_lower_bound}}
                           .dump()
                    << "\n";
            } else {
                out << info.real_dim << " " << reality_name(info.reality)
                    << (info.real_dim_is_lower_bound ? " (lower bound)" : "") << "\n";
            }
            return kExitOk;
        }

        if (cmd_enum->parsed()) {
            if (enum_bound.empty() || enum_bound.find_first_not_of("0123456789") != std::string::npos)
                throw CLI::ValidationError("--max-dim", "'" + enum_bound + "' is not a nonnegative integer");
            EnumerationRequest req{AlgebraType(detail::parse_algebra_family(enum_family), enum_rank),
                                   BigInt(enum_bound), std::nullopt,
                                   detail::enumeration_cap_from_env()};
            if (!enum_filter.empty()) req.descend_filter = detail::parse_group_family(enum_filter);
            std::vector<WeightDim> rows = enumerate_weights(req);
            if (format == "json") {
                out << weight_dims_to_json(rows).dump() << "\n";
            } else if (format == "csv") {
                out << "dim,coeffs\n";
                for (const auto& row : rows)
                    out << row.dim << "," << detail::coeffs_csv(row.weight.coeffs, ' ') << "\n";
            } else {
                for (const auto& row : rows)
                    out << row.dim << "\t" << detail::coeffs_csv(row.weight.coeffs) << "\n";
            }
            return kExitOk;
        }

        if (cmd_classify->parsed()) {
            ReductionQuery q{GroupDescriptor(detail::parse_group_family(cls_target), cls_n),
                             GroupDescriptor(detail::parse_group_family(cls_source), cls_k)};
            ReductionVerdict v = classify(q);
            if (format == "json") {
                out << verdict_to_json_string(v) << "\n";
            } else {
                detail::print_verdict_human(out, q, v);
            }
            return kExitOk;
        }

        if (cmd_mink->parsed()) {
            GroupDescriptor target(detail::parse_group_family(mink_target), mink_n);
            GroupFamily source = detail::parse_group_family(mink_source);
            std::optional<int> k = min_source_rank(target, source);
            bool trivial = k && source == target.family && *k == target.size;
            if (format == "json") {
                json obj{{"target", target.name()},
                         {"source_family", mink_source},
                         {"min_k", k ? json(*k) : json(nullptr)},
                         {"trivial", trivial}};
                out << obj.dump() << "\n";
            } else {
                if (!k) {
                    out << "none\n";
                } else {
                    out << *k << (trivial ? " (trivial)" : "") << "\n";
                }
            }
            return kExitOk;
        }

        if (cmd_ko->parsed()) {
            KOGroupInfo info = ko_group(ko_n, ko_k);
            bool fixed = fixed_generator_exists(ko_n, ko_k);
            if (format == "json") {
                out << ko_info_to_json(info, fixed).dump() << "\n";
            } else {
                out << "status: " << ko_status_name(info.status) << "\n";
                if (info.status == KOStatus::Computed) {
                    out << "order: " << info.order << "\n";
                    out << "psi3_multiplier: " << info.psi3_multiplier << "\n";
                } else if (info.status == KOStatus::ZeroProjection) {
                    out << "order: 2 (projection map is zero)\n";
                }
                out << "fixed_generator: " << (fixed ? "yes" : "no") << "\n";
            }
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            bool ok = false;
            if (verify_which == "prop51") ok = run_verify_prop51(out);
            else if (verify_which == "prop53") ok = run_verify_prop53(out);
            else if (verify_which == "lemma-sp3") ok = run_verify_lemma_sp3(out);
            else ok = run_verify_equiv_sweep(out);
            return ok ? kExitOk : kExitVerificationFailure;
        }

        if (cmd_atlas->parsed()) {
            GroupFamily target_family = detail::parse_group_family(atlas_target);
            GroupFamily source_family = detail::parse_group_family(atlas_source);
            detail::NRange range = detail::parse_n_range(atlas_range);
            json json_rows = json::array();
            if (format == "csv") out << "n,case,reducible,min_k\n";
            for (long long n = range.lo; n <= range.hi; ++n) {
                GroupDescriptor target(target_family, static_cast<int>(n));
                auto rc = reduction_case(target_family, source_family);
                std::optional<int> k = min_source_rank(target, source_family);
                bool trivial = k && source_family == target_family && *k == target.size;
                bool reducible = k.has_value() && !trivial;
                std::string case_str = rc ? std::string(1, case_letter(*rc)) : "-";
                std::string k_str = reducible ? std::to_string(*k) : "";
                if (format == "json") {
                    json_rows.push_back({{"n", n},
                                         {"case", rc ? json(case_str) : json(nullptr)},
                                         {"reducible", reducible},
                                         {"min_k", reducible ? json(*k) : json(nullptr)}});
                } else if (format == "csv") {
                    out << n << "," << case_str << "," << (reducible ? "yes" : "no") << "," << k_str
                        << "\n";
                } else {
                    out << "n=" << n << " case=" << case_str
                        << " reducible=" << (reducible ? "yes" : "no");
                    if (reducible) out << " min_k=" << *k;
                    out << "\n";
                }
            }
            if (format == "json") out << json_rows.dump() << "\n";
            return kExitOk;
        }

        err << "usage error: no subcommand\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "out of domain: " << e.what() << "\n";
        return kExitDomain;
    } catch (const EnumerationOverflow& e) {
        err << "out of domain: " << e.what() << "\n";
        return kExitDomain;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("sgr");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace sgr::cli
