#include "skewmorph/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "skewmorph/constructors.hpp"
#include "skewmorph/enumerate.hpp"
#include "skewmorph/invariants.hpp"
#include "skewmorph/number_theory.hpp"
#include "skewmorph/records.hpp"

namespace skewmorph {

namespace {

struct Globals {
    std::size_t max_order = 0;
    std::string out_path;
    bool quiet = false;
    unsigned threads = 1;
};

// A failed check: exit 1 after printing `record` (a JSON line) and `what`.
struct CheckFailure {
    std::string what;
    std::string record;
};

std::vector<AbelianGroup> parse_group_list(const std::string& list) {
    std::vector<AbelianGroup> groups;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) groups.push_back(AbelianGroup::parse(item));
    if (groups.empty()) throw GroupError("empty group list");
    return groups;
}

AbelianGroup cyclic(std::int64_t n) { return n == 1 ? AbelianGroup() : AbelianGroup({static_cast<int>(n)}); }

EnumerationOptions enum_options(const Globals& g) { return {g.max_order, g.threads}; }

std::string join(const std::vector<std::int64_t>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

// ------------------------------------------------------------------ verify suites

std::optional<CheckFailure> verify_theorem1_suite(const Globals& g, std::int64_t max_n, std::ostream& report) {
    const auto verdict = verify_theorem1(max_n, enum_options(g));
    std::vector<std::int64_t> nonsmooth_at;
    for (const auto& row : verdict.rows) {
        if (!g.quiet)
            report << "n=" << row.n << " total=" << row.total << " nonsmooth=" << row.nonsmooth
                   << " smooth_only=" << (row.predicate ? "yes" : "no") << (row.pass ? "" : "  FAIL") << '\n';
        if (row.nonsmooth > 0) nonsmooth_at.push_back(row.n);
    }
    report << "theorem1 n<=" << max_n << ": " << (verdict.pass ? "pass" : "FAIL") << ", non-smooth at "
           << join(nonsmooth_at) << '\n';
    if (verdict.pass) return std::nullopt;
    for (const auto& row : verdict.rows) {
        if (row.pass) continue;
        if (row.nonsmooth > 0) {
            const auto rep = enumerate_skew_morphisms(cyclic(row.n), enum_options(g));
            for (const auto& phi : rep.morphisms)
                if (!is_smooth(phi))
                    return CheckFailure{"Z" + std::to_string(row.n) + " has a non-smooth skew morphism", to_json(phi)};
        }
        return CheckFailure{"Z" + std::to_string(row.n) + " has no non-smooth skew morphism",
                            "{\"n\":" + std::to_string(row.n) + "}"};
    }
    return std::nullopt;
}

std::optional<CheckFailure> verify_csm_suite(const Globals& g, std::int64_t from, std::int64_t to, std::ostream& report) {
    for (std::int64_t n = from; n <= to; ++n) {
        std::set<std::vector<Element>> family;
        std::vector<SkewMorphism> built;
        for (const auto& params : enumerate_csm_params(n)) {
            auto phi = csm_construct(params);
            if (family.insert(phi.perm().table()).second) built.push_back(std::move(phi));
        }
        const auto rep = enumerate_skew_morphisms(cyclic(n), enum_options(g));
        std::set<std::vector<Element>> expected;
        for (const auto& phi : rep.morphisms) {
            if (!is_proper(phi) || !is_smooth(phi)) continue;
            expected.insert(phi.perm().table());
            if (!family.count(phi.perm().table()))
                return CheckFailure{"Z" + std::to_string(n) + ": proper smooth morphism missing from the CSM family",
                                    to_json(phi)};
        }
        for (const auto& phi : built)
            if (!expected.count(phi.perm().table()))
                return CheckFailure{"Z" + std::to_string(n) + ": CSM morphism is not a proper smooth enumerated one",
                                    to_json(phi)};
        if (!g.quiet) report << "n=" << n << " csm=" << family.size() << " enumerated=" << expected.size() << '\n';
    }
    report << "csm n=" << from << ".." << to << ": pass\n";
    return std::nullopt;
}

std::optional<CheckFailure> verify_identities_suite(const Globals& g, const std::vector<AbelianGroup>& groups,
                                                    std::ostream& report) {
    for (const auto& G : groups) {
        const auto rep = enumerate_skew_morphisms(G, enum_options(g));
        for (const auto& phi : rep.morphisms)
            if (auto f = check_invariants(phi)) {
                std::string what = G.label() + ": " + f->property;
                if (f->a) what += " fails at a=" + std::to_string(*f->a);
                if (f->b) what += ", b=" + std::to_string(*f->b);
                return CheckFailure{what, to_json(phi)};
            }
        report << "identities " << G.label() << ": pass (" << rep.morphisms.size() << " morphisms)\n";
    }
    return std::nullopt;
}

std::optional<CheckFailure> verify_theorem2_suite(const std::vector<AbelianGroup>& groups, std::ostream& report) {
    for (const auto& G : groups) {
        const bool smooth_only =
            G.is_cyclic() ? smooth_only_predicate(static_cast<std::int64_t>(G.order())) : theorem2_necessary(G);
        if (smooth_only) {
            report << "theorem2 " << G.label() << ": skipped (no construction applies)\n";
            continue;
        }
        const auto w = nonsmooth_witness(G);
        if (!w || is_smooth(*w))
            return CheckFailure{G.label() + ": no non-smooth witness", "{\"group\":\"" + G.label() + "\"}"};
        report << "theorem2 " << G.label() << ": witness of order " << w->order() << '\n';
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ reciprocal pairs

void reciprocal_report(const Globals& g, std::int64_t M, std::int64_t N, bool list, std::ostream& out) {
    const auto A = enumerate_skew_morphisms(cyclic(M), enum_options(g));
    const auto B = enumerate_skew_morphisms(cyclic(N), enum_options(g));
    std::size_t count = 0;
    std::ostringstream lines;
    for (const auto& phi : A.morphisms)
        for (const auto& psi : B.morphisms)
            if (is_reciprocal_pair(phi, psi)) {
                ++count;
                if (list) lines << "[" << to_json(phi) << "," << to_json(psi) << "]\n";
            }
    out << "reciprocal pairs of Z" << M << " and Z" << N << ": " << count << '\n' << lines.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skew morphisms of finite abelian groups", "skewmorph"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--max-order", g.max_order, "Largest group order to enumerate (0: built-in guard)");
    app.add_option("--out", g.out_path, "Write records to this file instead of stdout");
    app.add_flag("--quiet", g.quiet, "Only print summaries");
    app.add_option("--threads", g.threads, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Print every skew morphism of a group as JSON lines");
    std::string group_literal;
    bool oracle = false;
    enumerate->add_option("group", group_literal, "Group literal, e.g. Z6 or Z2xZ4")->required();
    enumerate->add_flag("--oracle", oracle, "Use the brute-force permutation oracle");

    // census
    auto* census = app.add_subcommand("census", "CSV summary of the skew morphisms of several groups");
    std::int64_t cyclic_from = 0, cyclic_to = 0;
    std::string group_list;
    bool no_timing = false;
    auto* from_opt = census->add_option("--cyclic-from", cyclic_from, "First cyclic order")->check(CLI::PositiveNumber);
    auto* to_opt = census->add_option("--cyclic-to", cyclic_to, "Last cyclic order")->check(CLI::PositiveNumber);
    auto* groups_opt = census->add_option("--groups", group_list, "Comma-separated group literals");
    from_opt->needs(to_opt);
    to_opt->needs(from_opt);
    groups_opt->excludes(from_opt)->excludes(to_opt);
    census->add_flag("--no-timing", no_timing, "Write 0 in the ms column");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::int64_t max_n = 0, single_n = 0;
    std::string verify_group, verify_groups;
    verify->add_option("suite", suite, "theorem1 | csm | identities | theorem2")
        ->required()
        ->check(CLI::IsMember({"theorem1", "csm", "identities", "theorem2"}));
    verify->add_option("--max-n", max_n, "Largest cyclic order")->check(CLI::PositiveNumber);
    verify->add_option("--n", single_n, "A single cyclic order")->check(CLI::PositiveNumber);
    verify->add_option("--group", verify_group, "Group literal");
    verify->add_option("--groups", verify_groups, "Comma-separated group literals");

    // construct
    auto* construct = app.add_subcommand("construct", "Build a morphism from an explicit family");
    construct->require_subcommand(1);
    std::int64_t cn = 0, ck = 0, cr = 0, cs = 0, ct = 0, cp = 0, cd = 0, cnu = 0, ce = 0;
    std::string witness_group;
    auto* c_csm = construct->add_subcommand("csm", "Smooth family: phi(x) = x + r*k*tau(s,t)-geometric sum");
    c_csm->add_option("--n", cn)->required();
    c_csm->add_option("--k", ck)->required();
    c_csm->add_option("--r", cr)->required();
    c_csm->add_option("--s", cs)->required();
    c_csm->add_option("--t", ct)->required();
    auto* c_root = construct->add_subcommand("root", "Square root of an automorphism: phi(x) = s*x - x(x-1)/2 * n/k");
    c_root->add_option("--n", cn)->required();
    c_root->add_option("--k", ck)->required();
    c_root->add_option("--s", cs)->required();
    auto* c_nse = construct->add_subcommand("nse", "Proper non-smooth morphism of Z_p x Z_p");
    c_nse->add_option("--p", cp)->required();
    c_nse->add_option("--d", cd)->required();
    c_nse->add_option("--nu", cnu)->required();
    c_nse->add_option("--r", cr)->required();
    auto* c_pns = construct->add_subcommand("pns", "Non-smooth witness on Z_{p^e}");
    c_pns->add_option("--p", cp)->required();
    c_pns->add_option("--e", ce)->required();
    auto* c_witness = construct->add_subcommand("witness", "Non-smooth witness on any abelian group");
    c_witness->add_option("group", witness_group)->required();

    // check
    auto* check = app.add_subcommand("check", "Re-derive every field of a JSON record");
    std::string check_file;
    check->add_option("--file", check_file, "Record file (- for stdin)")->required();

    // reciprocal
    auto* reciprocal = app.add_subcommand("reciprocal", "Reciprocal pairs of skew morphisms of Z_M and Z_N");
    std::int64_t rm = 0, rn = 0;
    bool list = false;
    reciprocal->add_option("--m", rm)->required()->check(CLI::PositiveNumber);
    reciprocal->add_option("--n", rn)->required()->check(CLI::PositiveNumber);
    reciprocal->add_flag("--list", list, "Print every pair");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    if (!g.out_path.empty()) {
        file.open(g.out_path);
        if (!file) {
            err << "error: cannot open " << g.out_path << " for writing\n";
            return kExitUsage;
        }
    }
    std::ostream& sink = g.out_path.empty() ? out : file;

    try {
        if (enumerate->parsed()) {
            const auto G = AbelianGroup::parse(group_literal);
            const auto rep = oracle ? brute_force_oracle(G, g.max_order ? g.max_order : kOracleGuard)
                                    : enumerate_skew_morphisms(G, enum_options(g));
            for (const auto& phi : rep.morphisms) sink << to_json(phi) << '\n';
            if (!g.quiet)
                err << G.label() << ": " << rep.counts.total << " skew morphisms (" << rep.counts.automorphisms
                    << " automorphisms, " << rep.counts.proper << " proper, " << rep.counts.nonsmooth
                    << " non-smooth)\n";
            return kExitPass;
        }

        if (census->parsed()) {
            std::vector<AbelianGroup> groups;
            if (!group_list.empty()) {
                groups = parse_group_list(group_list);
            } else if (*from_opt) {
                if (cyclic_to < cyclic_from) throw CLI::ValidationError("--cyclic-to must be >= --cyclic-from");
                for (auto n = cyclic_from; n <= cyclic_to; ++n) groups.push_back(cyclic(n));
            } else {
                throw CLI::ValidationError("census needs --groups or --cyclic-from/--cyclic-to");
            }
            for (const auto& G : groups) require_within_guard(G, enum_options(g));
            sink << kCsvHeader << '\n';
            for (const auto& G : groups)
                sink << csv_row(census_record(enumerate_skew_morphisms(G, enum_options(g))), !no_timing) << '\n';
            return kExitPass;
        }

        if (verify->parsed()) {
            std::optional<CheckFailure> failure;
            if (suite == "theorem1") {
                failure = verify_theorem1_suite(g, max_n ? max_n : 40, sink);
            } else if (suite == "csm") {
                const std::int64_t from = single_n ? single_n : 1;
                const std::int64_t to = single_n ? single_n : (max_n ? max_n : 40);
                failure = verify_csm_suite(g, from, to, sink);
            } else if (suite == "identities") {
                const std::string list_text = !verify_groups.empty() ? verify_groups : verify_group;
                if (list_text.empty()) throw CLI::ValidationError("identities needs --group or --groups");
                failure = verify_identities_suite(g, parse_group_list(list_text), sink);
            } else {
                if (verify_groups.empty() && verify_group.empty())
                    throw CLI::ValidationError("theorem2 needs --groups");
                failure = verify_theorem2_suite(
                    parse_group_list(!verify_groups.empty() ? verify_groups : verify_group), sink);
            }
            if (failure) {
                err << "FAIL: " << failure->what << '\n';
                sink << failure->record << '\n';
                return kExitFailure;
            }
            return kExitPass;
        }

        if (construct->parsed()) {
            std::optional<SkewMorphism> phi;
            if (c_csm->parsed()) {
                phi = csm_construct(check_csm({cn, ck, cr, cs, ct, 0}));
            } else if (c_root->parsed()) {
                RootParams p;
                p.n = cn;
                p.k = ck;
                p.s = cs;
                phi = root_construct(check_root(p));
            } else if (c_nse->parsed()) {
                NseParams p;
                p.p = cp;
                p.d = cd;
                p.nu = cnu;
                p.r = cr;
                phi = nse_construct(p).morphism;
            } else if (c_pns->parsed()) {
                if (ce < 0 || ce > 62) throw ParameterError("e", "pns: exponent out of range");
                phi = cp == 2 ? pns_witness_two(static_cast<int>(ce)) : pns_witness_odd(cp, static_cast<int>(ce));
            } else {
                const auto G = AbelianGroup::parse(witness_group);
                phi = nonsmooth_witness(G);
                if (!phi) {
                    err << G.label() << ": no construction applies\n";
                    return kExitFailure;
                }
            }
            sink << to_json(*phi) << '\n';
            return kExitPass;
        }

        if (check->parsed()) {
            std::string text;
            if (check_file == "-") {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                std::ifstream in(check_file);
                if (!in) {
                    err << "error: cannot read " << check_file << '\n';
                    return kExitUsage;
                }
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            const auto outcome = check_record(text);
            if (outcome.status == CheckOutcome::kMatch) {
                if (!g.quiet) sink << "ok\n";
                return kExitPass;
            }
            err << (outcome.status == CheckOutcome::kMalformed ? "malformed" : "mismatch");
            if (!outcome.field.empty()) err << " in field '" << outcome.field << "'";
            err << ": " << outcome.message << '\n';
            return outcome.status == CheckOutcome::kMalformed ? kExitUsage : kExitFailure;
        }

        reciprocal_report(g, rm, rn, list, sink);
        return kExitPass;
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << '\n';
        return kExitGuard;
    } catch (const ParameterError& e) {
        err << "rejected by condition " << e.condition() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const GroupError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace skewmorph
