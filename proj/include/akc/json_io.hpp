#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "akc/abacus.hpp"
#include "akc/blocks.hpp"
#include "akc/branching.hpp"
#include "akc/crystal.hpp"
#include "akc/partition.hpp"
#include "akc/quiver.hpp"
#include "akc/scopes.hpp"

namespace akc {

using json = nlohmann::ordered_json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const Multipartition& mp) {
    json out = json::array();
    for (const auto& c : mp.components()) out.push_back(to_json(c));
    return out;
}

inline Multipartition multipartition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("multipartition JSON must be an array");
    std::vector<Partition> comps;
    if (!j.empty() && j[0].is_number()) {
        // Level-1 convenience: a flat array of parts.
        comps.emplace_back(j.get<std::vector<long long>>());
    } else {
        for (const auto& c : j) comps.emplace_back(c.get<std::vector<long long>>());
    }
    return Multipartition(comps);
}

inline json to_json(const Content& c) {
    json out = json::object();
    for (const auto& [i, n] : c.counts()) out[std::to_string(i)] = n;
    return out;
}

inline json to_json(const Node& n) { return json::array({n.row, n.col, n.component}); }

inline json to_json(const std::map<long long, long long>& hub) {
    json out = json::object();
    for (const auto& [i, d] : hub) out[std::to_string(i)] = d;
    return out;
}

inline json to_json(const BetaNumbers& b) {
    json out = json::array();
    for (size_t j = 0; j < b.components.size(); ++j) {
        out.push_back({{"component", j + 1},
                       {"exceptional", b.components[j].exceptional},
                       {"full_below", b.components[j].full_below}});
    }
    return out;
}

inline json to_json(const QuiverData& q) {
    return {{"e", q.e()}, {"kappa", q.kappa()}};
}

inline json block_report_json(const BlockKey& key, const QuiverData& q,
                              bool with_members = false, const Bounds& bounds = Bounds{}) {
    json out;
    out["key"] = {{"e", q.e()}, {"kappa", q.kappa()}, {"content", to_json(key.alpha)}};
    out["key"]["n"] = key.n();
    BlockInvariants inv = block_invariants(key, q);
    out["invariants"] = {{"weight", inv.weight}, {"hub", to_json(inv.hub)}};
    if (q.e() >= 2 && !is_empty_block(key, q)) {
        auto [core, m] = core_block_of(key, q);
        CoreBlockData cd = base_tuple(core, q);
        out["core"] = {{"key", to_json(core.alpha)},
                       {"m", m},
                       {"charge", cd.charge},
                       {"base_tuple", cd.base},
                       {"K", cd.K}};
    }
    if (with_members) {
        json members = json::array();
        for (const auto& mp : enumerate_block(key, q, bounds)) members.push_back(to_json(mp));
        out["members"] = members;
    }
    return out;
}

inline json to_json(const LaurentPoly& p) {
    json out = json::object();
    for (const auto& [d, c] : p.terms()) out[std::to_string(d)] = c;
    return out;
}

inline json to_json(const GradedSum& s) {
    json out = json::array();
    for (const auto& [mp, p] : s.terms())
        out.push_back({{"mp", to_json(mp)}, {"poly", to_json(p)}});
    return out;
}

inline json crystal_json(const CrystalGraph& g, const QuiverData& q) {
    json vertices = json::array();
    for (const auto& v : g.vertices) {
        json eps = json::array(), phi = json::array();
        for (long long i = 0; i < q.e(); ++i) {
            auto sig = i_signature(v, q, i);
            eps.push_back(sig.eps());
            phi.push_back(sig.phi());
        }
        vertices.push_back({{"mp", to_json(v)},
                            {"wt", to_json(content(v, q))},
                            {"eps", eps},
                            {"phi", phi}});
    }
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"i", e.i}});
    return {{"config", to_json(q)}, {"n_max", g.n_max},
            {"vertices", vertices}, {"edges", edges}};
}

inline std::string crystal_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (size_t k = 0; k < g.vertices.size(); ++k)
        os << "  v" << k << " [label=\"" << to_string(g.vertices[k]) << "\"];\n";
    for (const auto& e : g.edges)
        os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.i << "\"];\n";
    os << "}\n";
    return os.str();
}

inline json to_json(const EquivalenceWitness& w, bool with_pairs = false) {
    json out = {{"source", to_json(w.source)},
                {"target", to_json(w.target)},
                {"i", w.i},
                {"k", w.k},
                {"direction", to_string(w.direction)},
                {"criteria", {{"webster", w.webster}, {"alice", w.alice}}},
                {"same_graded_decomposition_matrix", w.same_graded_decomposition_matrix}};
    if (with_pairs) {
        json pairs = json::array();
        for (const auto& [a, b] : w.pairs)
            pairs.push_back({to_json(a), to_json(b)});
        out["pairs"] = pairs;
    }
    return out;
}

inline json to_json(const std::vector<MoritaClass>& classes) {
    json out = json::array();
    for (const auto& cls : classes) {
        json members = json::array();
        for (const auto& m : cls.members) members.push_back(to_json(m));
        json witnesses = json::array();
        for (const auto& w : cls.witnesses) witnesses.push_back(to_json(w));
        out.push_back({{"representative", to_json(cls.representative)},
                       {"members", members},
                       {"witnesses", witnesses},
                       {"open_at_boundary", cls.open_at_boundary}});
    }
    return out;
}

inline json to_json(const ConsistencyReport& rep) {
    json anomalies = json::array();
    for (const auto& a : rep.anomalies) {
        anomalies.push_back({{"block", to_json(a.block)},
                             {"i", a.i},
                             {"alice", {{"holds", a.alice.holds},
                                        {"delta", a.alice.delta},
                                        {"weight", a.alice.weight},
                                        {"core", to_json(a.alice.core.alpha)},
                                        {"m", a.alice.m},
                                        {"K_i", a.alice.K_i},
                                        {"base_tuple", a.alice.core_data.base},
                                        {"charge", a.alice.core_data.charge}}},
                             {"webster", {{"holds", a.webster.holds},
                                          {"k", a.webster.k},
                                          {"direction", to_string(a.webster.direction)}}}});
    }
    return {{"checked", rep.checked},
            {"alice_true", rep.alice_true},
            {"webster_true", rep.webster_true},
            {"anomalies", anomalies}};
}

/// DOT export of the block-equivalence graph (one node per block, one edge
/// per spanning witness).
inline std::string classes_dot(const std::vector<MoritaClass>& classes) {
    std::ostringstream os;
    os << "graph scopes {\n";
    auto label = [](const Content& c) {
        std::ostringstream ls;
        ls << "n" << c.size() << " ";
        for (const auto& [i, n] : c.counts()) ls << i << ":" << n << " ";
        return ls.str();
    };
    int id = 0;
    std::map<std::string, int> ids;
    for (const auto& cls : classes)
        for (const auto& m : cls.members) {
            std::string l = label(m);
            ids[l] = id;
            os << "  b" << id++ << " [label=\"" << l << "\"];\n";
        }
    for (const auto& cls : classes)
        for (const auto& w : cls.witnesses)
            os << "  b" << ids.at(label(w.source)) << " -- b" << ids.at(label(w.target))
               << " [label=\"" << w.i << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace akc
