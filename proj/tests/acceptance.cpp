// Acceptance gate: one pass/fail line per criterion.  argv[1] must be the
// path to the akcli executable (used by the CLI determinism criterion).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "akc/branching.hpp"
#include "akc/crystal.hpp"
#include "akc/json_io.hpp"
#include "akc/scopes.hpp"
#include "test_helpers.hpp"

using namespace akc;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (error.empty()) {
        std::cout << name << ": PASS (" << ms << " ms)\n";
    } else {
        std::cout << name << ": FAIL (" << ms << " ms) -- " << error << "\n";
        ++g_failures;
    }
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

Content make_content(const std::vector<long long>& counts) {
    Content c;
    for (size_t i = 0; i < counts.size(); ++i)
        c.add(static_cast<long long>(i), counts[i]);
    return c;
}

ComponentBeta make_beta(std::vector<long long> exc, long long full_below) {
    ComponentBeta cb{std::move(exc), full_below};
    cb.normalize();
    return cb;
}

std::set<Content> blocks_up_to(const QuiverData& q, long long n_max) {
    std::set<Content> out;
    for (long long n = 0; n <= n_max; ++n)
        for_each_multipartition(n, q, [&](const Multipartition& mp) {
            out.insert(content(mp, q));
        });
    return out;
}

// ---------------------------------------------------------------------------

void residue_example() {
    QuiverData q(4, {1, 0, 2});
    Multipartition lam({Partition({1, 1, 1}), Partition({2, 1}), Partition({1, 1})});
    Multipartition mu({Partition({1}), Partition({2, 1}), Partition({2, 1, 1})});
    auto d = residue_diagram(lam, q);
    require(d[0] == std::vector<std::string>{"1", "0", "3"} &&
                d[1] == std::vector<std::string>{"01", "3"} &&
                d[2] == std::vector<std::string>{"2", "1"},
            "first residue diagram mismatch");
    auto dm = residue_diagram(mu, q);
    require(dm[0] == std::vector<std::string>{"1"} &&
                dm[1] == std::vector<std::string>{"01", "3"} &&
                dm[2] == std::vector<std::string>{"23", "1", "0"},
            "second residue diagram mismatch");
    std::multiset<long long> expected{0, 0, 1, 1, 1, 2, 3, 3};
    require(testing::residue_multiset(lam, q) == expected, "residue multiset of lambda");
    require(testing::residue_multiset(mu, q) == expected, "residue multiset of mu");
    require(block_key(lam, q) == block_key(mu, q), "block keys differ");
}

void abacus_example() {
    QuiverData q(4, {3, 1, 1});
    Multipartition mp({Partition({5, 4, 1}), Partition({3, 2, 2, 2}), Partition({4, 3, 1})});
    BetaNumbers b = beta_numbers(mp, q);
    require(b.components[0] == make_beta({7, 5, 1}, 0), "B^1 mismatch");
    // By beta^j_i = lambda_i + kappa_j - i with kappa_2 = 1 the second set is
    // {3,1,0,-1} u Z_{<-3} (charge 1).
    require(b.components[1] == make_beta({3, 1, 0, -1}, -3), "B^2 mismatch");
    require(b.components[2] == make_beta({4, 2, -1}, -2), "B^3 mismatch");
    require(multipartition_from_beta(b, q) == mp, "beta round trip");
}

void block_theory_suite() {
    for (int e : {2, 3, 4})
        for (int level : {1, 2, 3})
            for (const auto& kappa :
                 testing::random_multicharges(e, level, 5, 1000u + static_cast<unsigned>(e * 10 + level))) {
                QuiverData q(e, kappa);
                for (long long n = 0; n <= 8; ++n) {
                    std::map<Content, std::vector<Multipartition>> by_content;
                    std::map<std::multiset<long long>, std::set<Content>> by_res;
                    for_each_multipartition(n, q, [&](const Multipartition& mp) {
                        Content c = content(mp, q);
                        by_content[c].push_back(mp);
                        by_res[testing::residue_multiset(mp, q)].insert(c);
                    });
                    require(by_res.size() == by_content.size(),
                            "residue grouping differs from content grouping");
                    for (const auto& [res, cs] : by_res)
                        require(cs.size() == 1, "one residue multiset, several contents");
                    for (const auto& [alpha, members] : by_content) {
                        auto hub = hub_of(alpha, q);
                        long long w = weight_of(alpha, q);
                        require(w >= 0, "negative block weight");
                        for (const auto& mp : members)
                            require(hub_of(mp, q) == hub,
                                    "hub not constant on block / routes disagree");
                    }
                }
            }
}

void phi_suite() {
    for (int e : {2, 3, 4})
        for (int level : {1, 2, 3})
            for (const auto& kappa :
                 testing::random_multicharges(e, level, 5, 2000u + static_cast<unsigned>(e * 10 + level))) {
                QuiverData q(e, kappa);
                for (long long n = 0; n <= 8; ++n)
                    for_each_multipartition(n, q, [&](const Multipartition& mp) {
                        auto hub = hub_of(mp, q);
                        for (long long i = 0; i < e; ++i) {
                            // phi_map asserts the three routes agree internally.
                            Multipartition img = phi_map(mp, q, i);
                            require(phi_map(img, q, i) == mp, "phi not an involution");
                            require(img.size() - mp.size() == -hub_at(hub, i),
                                    "size change is not -delta_i");
                        }
                    });
            }
}

void crystal_suite() {
    // Axioms on generated graphs at n_max = 8.
    std::vector<std::pair<int, std::vector<long long>>> configs{
        {2, {0}}, {3, {0}}, {4, {0}}, {2, {0, 1}}, {3, {1, 2}}};
    for (const auto& [e, kappa] : configs) {
        QuiverData q(e, kappa);
        CrystalGraph g = build_crystal(q, 8);
        std::map<std::pair<int, long long>, int> out_deg, in_deg;
        for (const auto& edge : g.edges) {
            const Multipartition& x = g.vertices[static_cast<size_t>(edge.from)];
            const Multipartition& y = g.vertices[static_cast<size_t>(edge.to)];
            require(f_tilde(x, q, edge.i) == y && e_tilde(y, q, edge.i) == x,
                    "arrows are not mutually inverse");
            require(eps_i(y, q, edge.i) == eps_i(x, q, edge.i) + 1 &&
                        phi_i(y, q, edge.i) == phi_i(x, q, edge.i) - 1,
                    "eps/phi recursion fails along an arrow");
            require(++out_deg[{edge.from, edge.i}] == 1 &&
                        ++in_deg[{edge.to, edge.i}] == 1,
                    "more than one i-arrow at a vertex");
        }
        for (const auto& v : g.vertices)
            for (long long i = 0; i < e; ++i) {
                long long k = pairing(wt(v, q), i, q);
                require(k == phi_i(v, q, i) - eps_i(v, q, i),
                        "pairing differs from phi - eps");
                Multipartition img = sigma_i(v, q, i);
                require(sigma_i(img, q, i) == v, "sigma not an involution");
                auto shifted = content(v, q).shifted(i, k);
                require(shifted && content(img, q) == *shifted,
                        "sigma does not reflect the weight");
            }
    }
    // Level-one oracle up to n = 10.
    for (int e : {2, 3, 4}) {
        QuiverData q(e, {0});
        CrystalGraph g = build_crystal(q, 10);
        std::set<Multipartition> vertices(g.vertices.begin(), g.vertices.end());
        std::set<Multipartition> oracle;
        for (long long n = 0; n <= 10; ++n)
            for_each_multipartition(n, q, [&](const Multipartition& mp) {
                if (is_e_restricted(mp, q)) oracle.insert(mp);
            });
        require(vertices == oracle, "vertex set differs from e-restricted partitions");
    }
}

void branching_suite() {
    for (int e : {2, 3})
        for (int level : {1, 2})
            for (const auto& kappa :
                 testing::random_multicharges(e, level, 3, 3000u + static_cast<unsigned>(e))) {
                QuiverData q(e, kappa);
                for (long long n = 0; n <= 7; ++n)
                    for_each_multipartition(n, q, [&](const Multipartition& mp) {
                        GradedSum ind, res;
                        for (long long i = 0; i < e; ++i) {
                            GradedSum a = i_induce_specht(mp, q, i);
                            GradedSum b = i_restrict_specht(mp, q, i);
                            for (const auto& [lab, p] : a.terms())
                                require(content(lab, q) ==
                                            *content(mp, q).shifted(i, +1),
                                        "induced label in the wrong block");
                            for (const auto& [lab, p] : b.terms())
                                require(content(lab, q) ==
                                            *content(mp, q).shifted(i, -1),
                                        "restricted label in the wrong block");
                            ind += a;
                            res += b;
                        }
                        require(ind == induce_specht(mp, q) &&
                                    res == restrict_specht(mp, q),
                                "refinement does not partition Ind/Res");
                        require(ind.mass() ==
                                        static_cast<long long>(addable_nodes(mp, q).size()) &&
                                    res.mass() ==
                                        static_cast<long long>(removable_nodes(mp, q).size()),
                                "v=1 masses differ from node counts");
                    });
            }
    // Worked value.
    QuiverData q2(2, {0});
    require(restrict_specht(Multipartition({Partition({2, 1})}), q2).str() ==
                "S^(2) + v^{-1} S^(1,1)",
            "Res S^(2,1) mismatch");
    // Mahonian oracle for delta <= 6.
    for (int delta = 0; delta <= 6; ++delta) {
        auto counts = mahonian(delta);
        std::vector<long long> direct(counts.size(), 0);
        std::vector<int> perm(static_cast<size_t>(delta));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            ++direct[static_cast<size_t>(testing::inversions(perm))];
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (delta == 0) direct[0] = 1;
        require(counts == direct, "mahonian counts differ from permutation oracle");
        long long fact = 1, total = 0;
        for (int j = 2; j <= delta; ++j) fact *= j;
        for (size_t k = 0; k < counts.size(); ++k) {
            require(counts[k] == counts[counts.size() - 1 - k], "mahonian asymmetry");
            total += counts[k];
        }
        require(total == fact && divided_power_poly(delta).palindromic(),
                "mahonian total / palindromicity");
    }
}

void scopes_suite() {
    for (int e : {2, 3}) {
        QuiverData q(e, {0});
        CrystalGraph g = build_crystal(q, 8);
        std::set<Multipartition> vertices(g.vertices.begin(), g.vertices.end());
        for (const Content& alpha : blocks_up_to(q, 7))
            for (long long i = 0; i < e; ++i) {
                WebsterResult web = webster_condition(BlockKey{alpha}, q, i);
                if (!web.holds || web.k == 0) continue;
                WebsterResult back = webster_condition(BlockKey{web.target}, q, i);
                require(back.holds && back.k == -web.k && back.target == alpha,
                        "witness is not symmetric");
                if (web.target.size() > 8) continue;
                EquivalenceWitness w = phi_block_map(BlockKey{alpha}, q, i);
                require(w.pairs.size() == enumerate_block(BlockKey{web.target}, q).size(),
                        "member counts differ");
                require(weight_of(alpha, q) == weight_of(web.target, q),
                        "weight not preserved");
                std::set<Multipartition> tgt_verts, image;
                for (const auto& [src, dst] : w.pairs)
                    if (vertices.count(src)) image.insert(dst);
                for (const auto& mp : enumerate_block(BlockKey{web.target}, q))
                    if (vertices.count(mp)) tgt_verts.insert(mp);
                require(image == tgt_verts, "crystal vertices not preserved");
            }
    }
    // Documented example: e = 2, kappa = (0), n_max = 3.  The two weight-one
    // blocks of sizes 2 and 3 merge through the i = 0 witness; every
    // certified witness is applied, which also joins the weight-zero blocks
    // {}, {(1)}, {(2,1)} into a single class (their divided powers land in
    // vacuously empty weight spaces), leaving two classes in total.
    QuiverData q2(2, {0});
    auto classes = morita_classes(q2, 3);
    require(classes.size() == 2, "class count");
    std::set<Content> covered;
    for (const auto& cls : classes)
        for (const auto& m : cls.members) covered.insert(m);
    require(covered == blocks_up_to(q2, 3) && covered.size() == 5,
            "classes do not partition the blocks");
    auto same_class = [&](const Content& a, const Content& b) {
        for (const auto& cls : classes) {
            bool ha = std::count(cls.members.begin(), cls.members.end(), a) > 0;
            bool hb = std::count(cls.members.begin(), cls.members.end(), b) > 0;
            if (ha || hb) return ha && hb;
        }
        return false;
    };
    require(same_class(make_content({1, 1}), make_content({2, 1})),
            "weight-1 blocks of sizes 2 and 3 did not merge");
    require(!same_class(make_content({1, 1}), make_content({1, 0})),
            "distinct-weight blocks merged");
}

void consistency_suite() {
    for (int e : {2, 3})
        for (int level : {1, 2}) {
            std::vector<long long> kappa(static_cast<size_t>(level));
            for (int j = 0; j < level; ++j) kappa[static_cast<size_t>(j)] = j;
            QuiverData q(e, kappa);
            ConsistencyReport rep = consistency_report(q, 10);
            require(rep.checked > 0, "empty consistency scan");
            if (!rep.anomalies.empty()) {
                std::ostringstream os;
                os << rep.anomalies.size() << " anomalies; first: block="
                   << to_json(rep.anomalies[0].block).dump()
                   << " i=" << rep.anomalies[0].i
                   << " m=" << rep.anomalies[0].alice.m
                   << " K_i=" << rep.anomalies[0].alice.K_i
                   << " base=" << json(rep.anomalies[0].alice.core_data.base).dump()
                   << " charge=" << json(rep.anomalies[0].alice.core_data.charge).dump()
                   << " webster k=" << rep.anomalies[0].webster.k;
                throw std::runtime_error(os.str());
            }
        }
}

// ---------------------------------------------------------------------------

std::string g_cli;

int run_cli(const std::string& args) {
    int st = std::system((g_cli + " " + args).c_str());
    if (st == -1) throw std::runtime_error("failed to launch CLI");
    return WIFEXITED(st) ? WEXITSTATUS(st) : 128;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void cli_suite() {
    const std::string d = "/tmp/akc_accept";
    if (std::system(("mkdir -p " + d).c_str()) != 0)
        throw std::runtime_error("cannot create scratch directory");
    std::vector<std::string> commands{
        "block-info --e 4 --kappa 1,0,2 --mp \"[[1,1,1],[2,1],[1,1]]\"",
        "block-info --e 2 --kappa 0 --content 0,0 --format text",
        "block-info --e 3 --kappa 0 --content 1,1,0 --members",
        "crystal --e 2 --kappa 0 --nmax 2",
        "crystal --e 2 --kappa 0 --nmax 2 --format dot",
        "crystal --e 3 --kappa 0 --nmax 2",
        "crystal --e 2 --kappa 0 --nmax 0",
        "branch --e 2 --kappa 0 --mp \"[2,1]\" --op restrict",
        "branch --e 2 --kappa 0 --mp \"[]\" --op induce",
        "branch --e 3 --kappa 0 --mp \"[2]\" --op restrict --i 0",
        "scopes --e 2 --kappa 0 --nmax 3",
        "scopes --e 2 --kappa 0 --nmax 3 --format text",
        "scopes --e 2 --kappa 0 --nmax 0 --format text",
        "scopes --e 2 --kappa 0,1 --nmax 4 --jobs 3",
        "abacus --e 4 --kappa 3,1,1 --mp \"[[5,4,1],[3,2,2,2],[4,3,1]]\"",
    };
    for (size_t k = 0; k < commands.size(); ++k) {
        std::string f1 = d + "/out_" + std::to_string(k) + "_a";
        std::string f2 = d + "/out_" + std::to_string(k) + "_b";
        require(run_cli(commands[k] + " --out " + f1) == 0, "nonzero exit: " + commands[k]);
        require(run_cli(commands[k] + " --out " + f2) == 0, "nonzero exit: " + commands[k]);
        std::string a = slurp(f1);
        require(!a.empty() && a == slurp(f2), "nondeterministic output: " + commands[k]);
    }
    // Spot-check documented outputs.
    require(slurp(d + "/out_7_a") == "S^(2) + v^{-1} S^(1,1)\n", "Res S^(2,1) via CLI");
    require(slurp(d + "/out_8_a") == "S^(1)\n", "Ind empty via CLI");
    require(slurp(d + "/out_9_a") == "0\n", "zero restriction via CLI");
    require(slurp(d + "/out_12_a").find("1 classes") == 0, "nmax=0 class count");
    require(json::parse(slurp(d + "/out_3_a"))["vertices"].size() == 3 &&
                json::parse(slurp(d + "/out_3_a"))["edges"].size() == 2,
            "crystal size e=2 nmax=2");
    require(json::parse(slurp(d + "/out_5_a"))["vertices"].size() == 4,
            "crystal size e=3 nmax=2");
    require(json::parse(slurp(d + "/out_6_a"))["vertices"].size() == 1,
            "crystal size nmax=0");
    // Exit-code contract.
    std::string sink = " >/dev/null 2>&1";
    require(run_cli("block-info --e 4 --kappa 1,0,2 --mp \"[[1,2]]\"" + sink) == 2,
            "invalid multipartition should exit 2");
    require(run_cli("block-info --e 1 --kappa 0 --content 0" + sink) == 2,
            "invalid e should exit 2");
    require(run_cli("crystal --e 2 --kappa 0" + sink) == 2,
            "missing required flag should exit 2");
    require(run_cli("branch --e 2 --kappa 0 --mp \"not json\" --op restrict" + sink) == 2,
            "malformed JSON should exit 2");
    require(run_cli("crystal --e 2 --kappa 0 --nmax 40" + sink) == 3,
            "resource bound should exit 3");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-akcli>\n";
        return 2;
    }
    g_cli = argv[1];
    criterion("criterion-1-residue-example", residue_example);
    criterion("criterion-2-abacus-example", abacus_example);
    criterion("criterion-3-block-theory", block_theory_suite);
    criterion("criterion-4-phi-maps", phi_suite);
    criterion("criterion-5-crystal", crystal_suite);
    criterion("criterion-6-branching", branching_suite);
    criterion("criterion-7-equivalences", scopes_suite);
    criterion("criterion-8-criteria-consistency", consistency_suite);
    criterion("criterion-9-cli", cli_suite);
    return g_failures == 0 ? 0 : 1;
}
