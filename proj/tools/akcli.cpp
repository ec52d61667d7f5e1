// Command-line front end for the Ariki-Koike block-combinatorics library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "akc/json_io.hpp"

namespace {

struct CommonOpts {
    int e = 0;
    std::string kappa = "0";
    int level = 0; // 0 = derive from kappa
    std::string mp;
    std::string content_csv;
    long long nmax = 0;
    std::string format;
    std::string out;
    int jobs = 1;
    long long bound = 0; // 0 = library default
};

std::vector<long long> parse_csv(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in comma list");
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::invalid_argument("empty comma list");
    return out;
}

akc::QuiverData make_quiver(const CommonOpts& o) {
    auto kappa = parse_csv(o.kappa);
    if (o.level != 0 && o.level != static_cast<int>(kappa.size()))
        throw std::invalid_argument("--level does not match the multicharge length");
    return akc::QuiverData(o.e, kappa);
}

akc::Bounds make_bounds(const CommonOpts& o) {
    akc::Bounds b;
    if (o.bound > 0) b.max_n = o.bound;
    return b;
}

akc::Multipartition parse_mp(const std::string& s, const akc::QuiverData& q) {
    akc::Multipartition mp = akc::multipartition_from_json(akc::json::parse(s));
    // "[]" denotes the empty multipartition at the configured level.
    if (mp.level() == 0) return akc::Multipartition::empty(q.level());
    return mp;
}

akc::Content parse_content(const std::string& csv, const akc::QuiverData& q) {
    auto vals = parse_csv(csv);
    if (q.e() >= 2 && static_cast<int>(vals.size()) != q.e())
        throw std::invalid_argument("--content must list one count per residue 0..e-1");
    akc::Content c;
    for (size_t i = 0; i < vals.size(); ++i) c.add(static_cast<long long>(i), vals[i]);
    return c;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
    f << text;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_nmax) {
    cmd->add_option("--e", o.e, "quantum characteristic (0 or >= 2)")->required();
    cmd->add_option("--kappa", o.kappa, "multicharge, comma-separated")->required();
    cmd->add_option("--level", o.level, "number of components (checked against --kappa)");
    cmd->add_option("--format", o.format, "output format");
    cmd->add_option("--out", o.out, "output file (default: stdout)");
    cmd->add_option("--jobs", o.jobs, "worker threads for block scanning")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--bound", o.bound, "override the enumeration size guard");
    if (needs_nmax) cmd->add_option("--nmax", o.nmax, "largest size to scan")->required();
}

int run_block_info(const CommonOpts& o, bool members) {
    akc::QuiverData q = make_quiver(o);
    akc::Bounds bounds = make_bounds(o);
    akc::BlockKey key;
    if (!o.mp.empty()) {
        akc::Multipartition mp = parse_mp(o.mp, q);
        key = akc::block_key(mp, q);
    } else if (!o.content_csv.empty()) {
        key = akc::BlockKey{parse_content(o.content_csv, q)};
    } else {
        throw std::invalid_argument("block-info needs --mp or --content");
    }
    akc::json rep = akc::block_report_json(key, q, members, bounds);
    if (o.format == "text") {
        std::ostringstream os;
        os << "block n=" << key.n() << " content=" << akc::to_json(key.alpha).dump() << "\n";
        os << "weight " << rep["invariants"]["weight"] << "\n";
        os << "hub " << rep["invariants"]["hub"].dump() << "\n";
        if (rep.contains("core"))
            os << "core " << rep["core"].dump() << "\n";
        if (rep.contains("members"))
            os << "members " << rep["members"].dump() << "\n";
        emit(o, os.str());
    } else {
        emit(o, rep.dump(2) + "\n");
    }
    return 0;
}

int run_crystal(const CommonOpts& o) {
    akc::QuiverData q = make_quiver(o);
    akc::CrystalGraph g = akc::build_crystal(q, o.nmax, make_bounds(o));
    if (o.format == "dot")
        emit(o, akc::crystal_dot(g));
    else
        emit(o, akc::crystal_json(g, q).dump(2) + "\n");
    return 0;
}

int run_branch(const CommonOpts& o, const std::string& op, std::optional<long long> res) {
    akc::QuiverData q = make_quiver(o);
    if (o.mp.empty()) throw std::invalid_argument("branch needs --mp");
    akc::Multipartition mp = parse_mp(o.mp, q);
    akc::GradedSum sum;
    if (op == "induce")
        sum = res ? akc::i_induce_specht(mp, q, *res) : akc::induce_specht(mp, q);
    else
        sum = res ? akc::i_restrict_specht(mp, q, *res) : akc::restrict_specht(mp, q);
    if (o.format == "json")
        emit(o, akc::to_json(sum).dump(2) + "\n");
    else
        emit(o, sum.str() + "\n");
    return 0;
}

int run_scopes(const CommonOpts& o) {
    akc::QuiverData q = make_quiver(o);
    akc::Bounds bounds = make_bounds(o);
    auto classes = akc::morita_classes(q, o.nmax, bounds, o.jobs);
    auto report = akc::consistency_report(q, o.nmax, bounds);
    if (o.format == "dot") {
        emit(o, akc::classes_dot(classes));
    } else if (o.format == "text") {
        std::ostringstream os;
        os << classes.size() << " classes over n <= " << o.nmax << "\n";
        for (const auto& cls : classes) {
            os << "class rep=" << akc::to_json(cls.representative).dump()
               << " members=" << cls.members.size()
               << (cls.open_at_boundary ? " (open at boundary)" : "") << "\n";
        }
        os << "consistency: checked=" << report.checked
           << " anomalies=" << report.anomalies.size() << "\n";
        emit(o, os.str());
    } else {
        akc::json out = {{"config", akc::to_json(q)},
                         {"nmax", o.nmax},
                         {"classes", akc::to_json(classes)},
                         {"consistency", akc::to_json(report)}};
        emit(o, out.dump(2) + "\n");
    }
    return 0;
}

int run_abacus(const CommonOpts& o, const std::string& window) {
    akc::QuiverData q = make_quiver(o);
    if (o.mp.empty()) throw std::invalid_argument("abacus needs --mp");
    akc::Multipartition mp = parse_mp(o.mp, q);
    long long lo, hi;
    if (!window.empty()) {
        auto sep = window.find(':');
        if (sep == std::string::npos)
            throw std::invalid_argument("--window must be lo:hi");
        lo = std::stoll(window.substr(0, sep));
        hi = std::stoll(window.substr(sep + 1));
    } else {
        akc::BetaNumbers b = akc::beta_numbers(mp, q);
        lo = akc::floordiv(b.components[0].full_below, q.e()) - 1;
        hi = lo;
        for (const auto& cb : b.components) {
            lo = std::min(lo, akc::floordiv(cb.full_below, q.e()) - 1);
            for (long long beta : cb.exceptional)
                hi = std::max(hi, akc::floordiv(beta, q.e()));
        }
    }
    emit(o, akc::render_abacus(mp, q, lo, hi));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block combinatorics of Ariki-Koike algebras"};
    app.require_subcommand(1);
    app.set_config("--config");

    CommonOpts o;
    bool members = false;
    std::string op = "restrict";
    std::string window;
    long long res_filter = 0;
    bool has_res = false;

    CLI::App* block = app.add_subcommand("block-info", "block key, weight, hub, core data");
    add_common(block, o, false);
    block->add_option("--mp", o.mp, "multipartition as a JSON array of arrays");
    block->add_option("--content", o.content_csv, "content counts c_0,...,c_{e-1}");
    block->add_flag("--members", members, "list the block members");

    CLI::App* crystal = app.add_subcommand("crystal", "generate the highest-weight crystal");
    add_common(crystal, o, true);

    CLI::App* branch = app.add_subcommand("branch", "graded induction/restriction of a Specht label");
    add_common(branch, o, false);
    branch->add_option("--mp", o.mp, "multipartition as a JSON array of arrays");
    branch->add_option("--op", op, "induce or restrict")
        ->check(CLI::IsMember({"induce", "restrict"}));
    auto* ropt = branch->add_option("--i", res_filter, "restrict to a single residue");

    CLI::App* scopes = app.add_subcommand("scopes", "Morita classes and criteria consistency");
    add_common(scopes, o, true);

    CLI::App* abacus = app.add_subcommand("abacus", "text abacus display");
    add_common(abacus, o, false);
    abacus->add_option("--mp", o.mp, "multipartition as a JSON array of arrays");
    abacus->add_option("--window", window, "level window lo:hi (default: automatic)");

    try {
        app.parse(argc, argv);
        has_res = ropt->count() > 0;
        if (block->parsed()) return run_block_info(o, members);
        if (crystal->parsed()) return run_crystal(o);
        if (branch->parsed())
            return run_branch(o, op, has_res ? std::optional<long long>(res_filter)
                                             : std::nullopt);
        if (scopes->parsed()) return run_scopes(o);
        if (abacus->parsed()) return run_abacus(o, window);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const akc::resource_limit_error& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const akc::internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
