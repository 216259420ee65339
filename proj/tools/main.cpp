#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "geproci/geproci.hpp"
#include "geproci/ks.hpp"
#include "geproci/suite.hpp"
#include "geproci/unexpected.hpp"
#include "geproci/weddle.hpp"

using namespace gp;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kYes = 0, kNo = 1, kInconclusive = 2, kUsage = 3 };

struct Globals {
  bool json_out = false;
  u64 seed = 1;
  u64 prime = 0;
  int trials = 3;
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Yes: return kYes;
    case Verdict::No: return kNo;
    default: return kInconclusive;
  }
}

int emit_decision(const Globals& g, const Decision& d) {
  if (g.json_out)
    std::cout << decision_json(d) << "\n";
  else
    std::cout << verdict_name(d.verdict) << "  (prime " << d.prime << ", seed " << d.seed << ", trials " << d.trials
              << ")" << (d.reason.empty() ? "" : "\n  " + d.reason) << "\n";
  return verdict_exit(d.verdict);
}

// Plain yes/no results share the decision payload shape.
int emit_bool(const Globals& g, const Configuration& z, bool v, json data) {
  if (g.json_out) {
    json j;
    j["verdict"] = v ? "yes" : "no";
    j["prime"] = z.field.prime;
    j["seed"] = g.seed;
    j["trials"] = g.trials;
    j["data"] = std::move(data);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (v ? "yes" : "no") << "\n";
  }
  return v ? kYes : kNo;
}

std::vector<size_t> read_indices(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IOError", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::vector<size_t> idx;
  if (text.find('[') != std::string::npos) {
    for (long v : json::parse(text)) idx.push_back(static_cast<size_t>(v));
  } else {
    std::istringstream is(text);
    long v;
    while (is >> v) idx.push_back(static_cast<size_t>(v));
  }
  return idx;
}

std::string census_json(const IncidenceCensus& c) {
  json j = json::object();
  for (auto [k, v] : c.histogram) j[std::to_string(k)] = v;
  return j.dump();
}

int run_suite(const Globals& g, const std::string& name) {
  std::vector<std::string> keys;
  for (const auto& c : criteria())
    if (name.empty() || c.key == name) keys.push_back(c.key);
  if (keys.empty()) throw Error("UnknownCriterion", name);
  std::vector<std::future<CriterionResult>> jobs;
  for (const auto& k : keys) jobs.push_back(std::async(std::launch::async, run_criterion, k, g.seed));
  bool all = true;
  json arr = json::array();
  for (auto& j : jobs) {
    CriterionResult r = j.get();
    all = all && r.pass();
    if (g.json_out) {
      arr.push_back(json::parse(criterion_json(r)));
      continue;
    }
    std::cout << (r.pass() ? "PASS" : "FAIL") << "  " << r.id << ". " << r.title << "\n";
    for (const auto& c : r.checks)
      std::cout << "    [" << (c.pass ? "ok" : "xx") << "] " << c.name << ": " << c.detail << "\n";
  }
  if (g.json_out) std::cout << arr.dump() << "\n";
  return all ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point configurations in projective space: geproci checks, Weddle loci, unexpected cones"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--prime", g.prime, "prime to work over (0: automatic)");
  app.add_option("-t,--trials", g.trials, "random trials")->capture_default_str();

  std::function<int()> action;

  // construct
  auto* construct = app.add_subcommand("construct", "build a configuration and write it as JSON");
  std::string what, out_path, from_path, which = "Y1";
  int ca = 0, cb = 0, cn = 0;
  construct->add_option("what", what, "named label, or grid | std | extend")->required();
  construct->add_option("-o,--output", out_path, "output file")->required();
  construct->add_option("-a", ca, "grid: first ruling size");
  construct->add_option("-b", cb, "grid: second ruling size");
  construct->add_option("-n", cn, "std: n");
  construct->add_option("--which", which, "std: Y1, Y2 or Y1Y2");
  construct->add_option("--from", from_path, "extend: input configuration");
  construct->callback([&] {
    action = [&] {
      Configuration z;
      if (what == "grid") {
        z = roots_grid(ca, cb, g.prime);
      } else if (what == "std") {
        StdWhich w = which == "Y1" ? StdWhich::Y1 : which == "Y2" ? StdWhich::Y2 : StdWhich::Y1Y2;
        if (which != "Y1" && which != "Y2" && which != "Y1Y2") throw Error("Usage", "--which must be Y1, Y2 or Y1Y2");
        z = std_construction(cn, w, g.prime);
      } else if (what == "extend") {
        z = extend_standard(load(from_path, g.prime));
      } else {
        z = named(what, g.prime);
      }
      save(z, out_path);
      if (!g.json_out) std::cout << z.label << ": " << z.size() << " points in P^" << z.ambient_dim << "\n";
      return static_cast<int>(kYes);
    };
  });

  // check geproci | ci222
  auto* check = app.add_subcommand("check", "geproci or (2,2,2) complete intersection check");
  check->require_subcommand(1);
  auto* cg = check->add_subcommand("geproci", "is the configuration (a,b)-geproci");
  std::string file;
  int ga = 0, gb = 0;
  cg->add_option("-a", ga)->required();
  cg->add_option("-b", gb)->required();
  cg->add_option("file", file)->required();
  cg->callback([&] {
    action = [&] { return emit_decision(g, is_geproci(load(file, g.prime), ga, gb, g.trials, g.seed)); };
  });
  auto* cc = check->add_subcommand("ci222", "is the 8-point set a (2,2,2) complete intersection");
  cc->add_option("file", file)->required();
  cc->callback([&] { action = [&] { return emit_decision(g, is_ci222_p4(load(file, g.prime), g.trials, g.seed)); }; });

  // census lines | planes
  auto* census = app.add_subcommand("census", "line or plane incidence census");
  std::string kind;
  census->add_option("kind", kind)->required()->check(CLI::IsMember({"lines", "planes"}));
  census->add_option("file", file)->required();
  census->callback([&] {
    action = [&] {
      Configuration z = load(file, g.prime);
      IncidenceCensus c = kind == "lines" ? line_census(z) : plane_census(z);
      if (g.json_out) {
        std::cout << census_json(c) << "\n";
      } else {
        for (auto [k, v] : c.histogram) std::cout << k << "-point " << kind << ": " << v << "\n";
        std::cout << "total: " << c.total() << "\n";
      }
      return static_cast<int>(kYes);
    };
  });

  // weddle member | degree
  auto* weddle = app.add_subcommand("weddle", "Weddle locus membership or degree");
  std::string wkind, probe;
  int wd = 2;
  weddle->add_option("kind", wkind)->required()->check(CLI::IsMember({"member", "degree"}));
  weddle->add_option("-d", wd, "degree")->capture_default_str();
  weddle->add_option("file", file)->required();
  weddle->add_option("--probe", probe, "configuration of probe points (member)");
  weddle->callback([&] {
    action = [&] {
      Configuration z = load(file, g.prime);
      WeddleContext ctx = weddle_context(z, wd, g.seed);
      if (wkind == "degree") {
        WeddleDegree w = weddle_degree(ctx, g.seed);
        json data = {{"rho", ctx.rho}, {"stable", ctx.stable}, {"identically_zero", w.identically_zero},
                     {"degree", w.degree}, {"block", std::to_string(w.rows) + "x" + std::to_string(w.cols)}};
        if (!g.json_out) {
          if (w.identically_zero)
            std::cout << "IdenticallyZero\n";
          else
            std::cout << "degree " << w.degree << "\n";
          return static_cast<int>(kYes);
        }
        return emit_bool(g, z, true, data);
      }
      if (probe.empty()) throw Error("Usage", "weddle member needs --probe");
      Configuration pr = load(probe, z.field.prime);
      json mem = json::array();
      bool all = true;
      for (const auto& p : pr.points) {
        bool m = weddle_member(ctx, p);
        mem.push_back(m);
        all = all && m;
        if (!g.json_out) std::cout << (m ? "member" : "not member") << "\n";
      }
      if (g.json_out) return emit_bool(g, z, all, {{"members", mem}});
      return all ? static_cast<int>(kYes) : static_cast<int>(kNo);
    };
  });

  // unexpected adim | vdim | c
  auto* unexp = app.add_subcommand("unexpected", "actual/virtual dimensions and the C(t) predicate");
  std::string ukind;
  int ut = 0, um = -1;
  unexp->add_option("kind", ukind)->required()->check(CLI::IsMember({"adim", "vdim", "c"}));
  unexp->add_option("-t", ut, "degree")->required();
  unexp->add_option("-m", um, "multiplicity (default t)");
  unexp->add_option("file", file)->required();
  unexp->callback([&] {
    action = [&] {
      Configuration z = load(file, g.prime);
      int m = um < 0 ? ut : um;
      if (ukind == "c") {
        if (m != ut) throw Error("Usage", "C(t) uses m = t");
        UnexpReport u = c_predicate(z, ut, g.trials, g.seed);
        return emit_bool(g, z, u.unexpected, {{"t", u.t}, {"adim", u.adim}, {"vdim", u.vdim}});
      }
      long v = ukind == "adim" ? adim(z, ut, m, g.trials, g.seed) : vdim(z, ut, m);
      if (g.json_out)
        emit_bool(g, z, true, {{ukind, v}, {"t", ut}, {"m", m}});
      else
        std::cout << v << "\n";
      return static_cast<int>(kYes);
    };
  });

  // ks
  auto* ks = app.add_subcommand("ks", "Kochen-Specker truth-assignment check");
  ks->add_option("file", file)->required();
  ks->callback([&] {
    action = [&] {
      Configuration z = load(file, g.prime);
      OrthoGraph og = ortho_graph(z);
      auto ta = truth_assignment(og);
      return emit_bool(g, z, !ta.has_value(),
                       {{"vectors", og.n}, {"edges", og.edges.size()}, {"bases", og.bases.size()}});
    };
  });

  // cbp
  auto* cbp = app.add_subcommand("cbp", "Cayley-Bacharach property of a general projection");
  bool ambient = false;
  cbp->add_flag("--ambient", ambient, "test the configuration itself instead");
  cbp->add_option("file", file)->required();
  cbp->callback([&] {
    action = [&] {
      Configuration z = load(file, g.prime);
      if (ambient) return emit_bool(g, z, cbp_ambient(z), json::object());
      return emit_decision(g, geprocb(z, g.trials, g.seed));
    };
  });

  // remember
  auto* rem = app.add_subcommand("remember", "does a subset W remember Z in degree m");
  int rm = 0;
  std::string subset_path;
  rem->add_option("-m", rm)->required();
  rem->add_option("--subset", subset_path, "file of point indices")->required();
  rem->add_option("file", file)->required();
  rem->callback([&] {
    action = [&] {
      Configuration z = load(file, g.prime);
      Configuration w = subset(z, read_indices(subset_path), z.label + "_subset");
      return emit_decision(g, remembers(w, z, rm, g.trials, g.seed));
    };
  });

  // equiv
  auto* eq = app.add_subcommand("equiv", "weak combinatorial equivalence");
  std::string file2;
  eq->add_option("file1", file)->required();
  eq->add_option("file2", file2)->required();
  eq->callback([&] {
    action = [&] {
      Configuration z1 = load(file, g.prime);
      Configuration z2 = load(file2, z1.field.prime);
      EquivResult e = weak_comb_equivalent(z1, z2);
      const char* names[] = {"distinguished", "equivalent", "unknown"};
      std::string k = names[static_cast<int>(e.kind)];
      if (g.json_out) {
        json j = {{"verdict", e.kind == EquivResult::Kind::Equivalent ? "yes"
                              : e.kind == EquivResult::Kind::Distinguished ? "no" : "inconclusive"},
                  {"prime", z1.field.prime}, {"seed", g.seed}, {"trials", g.trials},
                  {"data", {{"result", k}, {"invariant", e.invariant}, {"bijection", e.bijection}}}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << k << (e.invariant.empty() ? "" : " (" + e.invariant + ")") << "\n";
      }
      return e.kind == EquivResult::Kind::Equivalent ? static_cast<int>(kYes)
             : e.kind == EquivResult::Kind::Distinguished ? static_cast<int>(kNo) : static_cast<int>(kInconclusive);
    };
  });

  // suite
  auto* suite = app.add_subcommand("suite", "run acceptance groups");
  std::string suite_name;
  suite->add_option("name", suite_name, "criterion key (default: all)");
  suite->callback([&] { action = [&] { return run_suite(g, suite_name); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : static_cast<int>(kUsage);
  }
  try {
    return action ? action() : static_cast<int>(kUsage);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
