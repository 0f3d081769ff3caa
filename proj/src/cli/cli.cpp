#include "bpk/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "bpk/colouring.hpp"
#include "bpk/drawing_io.hpp"
#include "bpk/error.hpp"
#include "bpk/families.hpp"
#include "bpk/forests.hpp"
#include "bpk/matching.hpp"
#include "bpk/planarisation.hpp"
#include "bpk/product_structure.hpp"
#include "bpk/recognition.hpp"

namespace bpk {

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// A verified inequality failed; the witness has been written.
struct CheckFailed {};

std::string read_text(const std::string& path, Io& io) {
  std::ostringstream buf;
  if (path == "-") {
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  buf << f.rdbuf();
  return buf.str();
}

Json read_json(const std::string& path, Io& io) {
  try {
    return Json::parse(read_text(path, io));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, Io& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  f << text;
}

std::string witness_path(const std::string& flag, const std::string& input) {
  if (!flag.empty()) return flag;
  if (input.empty() || input == "-") return "bpk-witness.json";
  return input + ".witness.json";
}

void fail_with_witness(const Json& witness, const std::string& path, Io& io) {
  std::ofstream f(path);
  if (f) f << witness.dump(2) << "\n";
  io.err << Json{{"error", "CheckFailed"}, {"witness", path}}.dump() << "\n";
  throw CheckFailed{};
}

Json report_json(const Report& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"code", x.code}, {"detail", x.detail}});
  return v;
}

TopologicalDrawing load_drawing(const std::string& path, Io& io) {
  return drawing_from_json(read_json(path, io));
}

std::vector<int> choose_colouring(const TopologicalDrawing& d, const std::string& colours,
                                  const std::string& method, Io& io) {
  if (!colours.empty())
    return colouring_from_json(read_json(colours, io), d.base().num_edges());
  if (method == "greedy") return greedy_transparent(d).colour;
  if (method == "product") return product_transparent(d).colouring.colour;
  throw Error(ErrorKind::InvalidInput, "unknown colouring method " + method);
}

int resolve_cap(int flag) { return flag > 0 ? flag : treewidth_cap_from_env(); }

FamilyParams params_from_json(const Json& j, FamilyParams p) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "params must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "n") p.n = value.get<int>();
    else if (key == "m") p.m = value.get<int>();
    else if (key == "k") p.k = value.get<int>();
    else if (key == "a") p.a = value.get<int>();
    else if (key == "b") p.b = value.get<int>();
    else if (key == "bends") p.bends = value.get<int>();
    else if (key == "p") p.p = value.get<double>();
    else if (key == "seed") p.seed = value.get<std::uint64_t>();
    else throw Error(ErrorKind::InvalidInput, "unknown parameter " + key);
  }
  return p;
}

// ---------------------------------------------------------------- commands

struct GenArgs {
  std::string family;
  FamilyParams p;
  std::string out = "-";
  std::string colouring_out;
};

int cmd_gen(const GenArgs& a, Io& io) {
  auto inst = gen_family(a.family, a.p);
  write_text(a.out, drawing_to_json(inst.drawing).dump(2) + "\n", io);
  if (!a.colouring_out.empty())
    write_text(a.colouring_out, colouring_to_json(inst.colouring).dump(2) + "\n", io);
  return kExitOk;
}

struct CheckArgs {
  std::string file;
  int k = -1;
  bool profile = false;
  std::string witness;
};

int cmd_check(const CheckArgs& a, Io& io) {
  auto d = load_drawing(a.file, io);
  auto prof = drawing_profile(d);
  Json j;
  j["matching_k"] = prof.matching_k;
  if (a.profile) {
    j["simple"] = prof.simple;
    j["vertices"] = d.base().num_vertices();
    j["edges"] = d.base().num_edges();
    j["crossings"] = prof.crossings;
    j["max_crossings_per_edge"] = prof.max_crossings_per_edge;
    j["per_pair_max"] = prof.per_pair_max;
    j["min_k_planar"] = prof.min_k_planar;
    j["cover_k"] = prof.cover_k;
    j["largest_fan"] = prof.largest_fan;
    j["fan_t"] = prof.fan_t;
  }
  io.out << j.dump(2) << "\n";
  if (a.k >= 0 && prof.matching_k > a.k) {
    for (EdgeId e = 0; e < d.base().num_edges(); ++e) {
      auto crossers = d.crossers(e);
      auto mm = max_matching(d.base(), crossers);
      if (mm.size > a.k)
        fail_with_witness({{"check", "matching_k"}, {"k", a.k}, {"edge", e},
                           {"crossers", crossers}, {"matching", mm.witness}},
                          witness_path(a.witness, a.file), io);
    }
  }
  return kExitOk;
}

struct ColourArgs {
  std::string file;
  std::string method = "product";
  std::string out = "-";
};

int cmd_colour(const ColourArgs& a, Io& io) {
  auto d = load_drawing(a.file, io);
  auto colour = choose_colouring(d, "", a.method, io);
  write_text(a.out, colouring_to_json(colour).dump(2) + "\n", io);
  return kExitOk;
}

struct PlanariseArgs {
  std::string file;
  std::string colours;
  std::string method = "product";
  bool dot = false;
  std::string out = "-";
};

int cmd_planarise(const PlanariseArgs& a, Io& io) {
  auto d = load_drawing(a.file, io);
  auto colour = choose_colouring(d, a.colours, a.method, io);
  auto cp = coloured_planarisation(d, colour);
  if (a.dot) {
    std::ostringstream s;
    write_dot(s, cp.g, level_labels(cp));
    write_text(a.out, s.str(), io);
    return kExitOk;
  }
  Json j{{"planarisation", graph_to_json(cp.planar.g)},
         {"coloured", graph_to_json(cp.g)},
         {"mapping", coloured_planarisation_to_json(cp)}};
  write_text(a.out, j.dump(2) + "\n", io);
  return kExitOk;
}

struct ModelArgs {
  std::string file;
  std::string colours;
  std::string method = "product";
  std::string out = "-";
  std::string witness;
};

int cmd_model(const ModelArgs& a, Io& io) {
  auto d = load_drawing(a.file, io);
  std::vector<int> colour;
  StarForestCover cover;
  if (a.colours.empty() && a.method == "product") {
    auto pc = product_transparent(d);
    colour = pc.colouring.colour;
    cover = pc.cover;
  } else {
    colour = choose_colouring(d, a.colours, a.method, io);
    cover = build_star_forest_cover(d.base(), colour);
  }
  auto cp = coloured_planarisation(d, colour);
  auto model = cpl_model(d, cp, cover);
  auto rep = validate_cpl(d, cp, model);
  Json j{{"t", model.t}, {"s", model.s}, {"m", model.m}, {"c", model.c},
         {"host_vertices", model.host.num_vertices()},
         {"b_sets", model.b_sets}, {"branch_sets", model.mu.branch_sets},
         {"valid", rep.ok()}};
  write_text(a.out, j.dump(2) + "\n", io);
  if (!rep.ok())
    fail_with_witness({{"check", "cpl"}, {"violations", report_json(rep)}},
                      witness_path(a.witness, a.file), io);
  return kExitOk;
}

struct VerifyArgs {
  std::string file;
  std::string suite = "all";
  std::string colours;
  std::string method = "product";
  int cap = 0;
  std::string witness;
};

int cmd_verify(const VerifyArgs& a, Io& io) {
  static const std::vector<std::string> kSuites{"walks", "cpl",     "distance", "ltw",
                                                "density", "freeness", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), a.suite) == kSuites.end())
    throw Error(ErrorKind::InvalidInput, "unknown suite " + a.suite);
  auto d = load_drawing(a.file, io);
  const bool all = a.suite == "all";
  auto want = [&](const char* s) { return all || a.suite == s; };
  Json results = Json::object();
  bool ok = true;
  auto record = [&](const std::string& name, const Report& rep, Json extra = Json::object()) {
    extra["pass"] = rep.ok();
    if (!rep.ok()) extra["violations"] = report_json(rep);
    results[name] = extra;
    ok = ok && rep.ok();
  };

  if (want("walks") || want("cpl") || want("distance") || want("ltw")) {
    std::vector<int> colour;
    StarForestCover cover;
    if (a.colours.empty() && a.method == "product") {
      auto pc = product_transparent(d);
      colour = pc.colouring.colour;
      cover = pc.cover;
    } else {
      colour = choose_colouring(d, a.colours, a.method, io);
      cover = build_star_forest_cover(d.base(), colour);
    }
    auto cp = coloured_planarisation(d, colour);
    if (want("walks")) {
      Report rep = validate_coloured_planarisation(d, cp);
      rep.merge(verify_walk_properties(d, cp));
      record("walks", rep);
    }
    std::optional<CplModel> model;
    if (want("cpl") || want("ltw")) model = cpl_model(d, cp, cover);
    if (want("cpl"))
      record("cpl", validate_cpl(d, cp, *model),
             {{"t", model->t}, {"s", model->s}, {"m", model->m}, {"c", model->c}});
    if (want("distance")) {
      auto dist = distance_check(d, cp, measure_k_lower(d, colour));
      Report rep;
      if (!dist.pass) rep.add("distance.bound", dist.witness);
      record("distance", rep,
             {{"k", dist.k}, {"max_observed", dist.max_observed},
              {"bound", dist.bound.get_str()}});
    }
    if (want("ltw")) {
      Report rep;
      Json extra = Json::object();
      try {
        auto w = weak_shallow_from_cpl(d, cp, *model);
        rep.merge(validate_weak_shallow(d.base(), model->host, w));
        auto host_ld = host_layered_decomposition(cp, model->t, resolve_cap(a.cap));
        rep.merge(validate_layered_decomposition(model->host, host_ld));
        auto guest = ltw_transfer(d.base(), model->host, host_ld, w);
        rep.merge(validate_layered_decomposition(d.base(), guest));
        const long long limit = (4LL * w.r + 1) * host_ld.layered_width;
        if (guest.layered_width > limit)
          rep.add("ltw.width", std::to_string(guest.layered_width) + " > " +
                                   std::to_string(limit));
        extra = {{"r", w.r}, {"host_layered_width", host_ld.layered_width},
                 {"layered_width", guest.layered_width}};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::RadiusExceeded) throw;
        rep.add("ltw.radius", e.what());
      }
      record("ltw", rep, extra);
    }
  }
  if (want("density")) {
    auto dr = density_check(d);
    Report rep;
    if (!dr.pass) rep.add("density.bound", std::to_string(dr.edges) + " > " + dr.bound);
    record("density", rep, {{"k", dr.k}, {"edges", dr.edges}, {"bound", dr.bound}});
  }
  if (want("freeness")) {
    Report rep;
    Json forests = Json::array();
    for (const auto& sf : fan_refined_star_forests(d)) {
      auto fr = star_freeness(d, sf);
      forests.push_back({{"components", fr.components}, {"clique", fr.clique},
                         {"biclique", fr.biclique}});
      if (!fr.pass)
        rep.add("freeness.bound", "clique " + std::to_string(fr.clique) + " biclique " +
                                      std::to_string(fr.biclique));
    }
    record("freeness", rep, {{"forests", forests}});
  }
  io.out << results.dump(2) << "\n";
  if (!ok)
    fail_with_witness({{"check", a.suite}, {"results", results}},
                      witness_path(a.witness, a.file), io);
  return kExitOk;
}

struct BoundsArgs {
  std::string file;
  bool circular = false;
  bool radius = false;
  int root = -1;
  std::string colours;
  std::string method = "greedy";
  bool json = false;
  int cap = 0;
  std::string out = "-";
  std::string witness;
};

int cmd_bounds(const BoundsArgs& a, Io& io) {
  auto d = load_drawing(a.file, io);
  const int cap = resolve_cap(a.cap);
  BoundReport br;
  if (a.circular || a.radius) {
    auto colour = choose_colouring(d, a.colours, a.method, io);
    if (a.circular) {
      br = circular_tw_bound(d, colour, cap);
    } else {
      Vertex root = a.root;
      if (root < 0) {
        // A vertex of largest degree keeps the tree radius small.
        root = 0;
        for (Vertex v = 1; v < d.base().num_vertices(); ++v)
          if (d.base().degree(v) > d.base().degree(root)) root = v;
      }
      if (root >= d.base().num_vertices())
        throw Error(ErrorKind::InvalidInput, "root out of range");
      br = radius_tw_bound(d, colour, bfs_spanning_tree(d.base(), root), cap);
    }
  } else {
    br = pipeline_report(d, cap);
  }
  br.instance = a.file == "-" ? "stdin" : a.file;
  write_text(a.out, a.json ? bound_report_to_json(br).dump(2) + "\n" : bound_report_table(br),
             io);
  if (!br.pass())
    fail_with_witness({{"check", "bounds"}, {"report", bound_report_to_json(br)}},
                      witness_path(a.witness, a.file), io);
  return kExitOk;
}

// ------------------------------------------------------------------ bench

struct BenchArgs {
  std::string manifest;
  std::optional<std::uint64_t> seed;
  int cap = 0;
  std::string out = "-";
  std::string witness;
};

const std::vector<std::string> kBenchSuites{"walks", "cpl",      "distance", "ltw",
                                            "density", "circular", "all"};

std::string yesno(bool b) { return b ? "pass" : "FAIL"; }

int cmd_bench(const BenchArgs& a, Io& io) {
  Json manifest = read_json(a.manifest, io);
  if (!manifest.is_object() || !manifest.contains("instances") ||
      !manifest["instances"].is_array())
    throw Error(ErrorKind::InvalidInput, "manifest needs an instances array");
  const std::uint64_t base_seed =
      a.seed ? *a.seed : manifest.value("seed", static_cast<std::uint64_t>(1));
  int cap = resolve_cap(a.cap);
  if (a.cap <= 0 && manifest.contains("cap_tw")) cap = manifest["cap_tw"].get<int>();

  std::ostringstream csv;
  csv << "id,source,seed,vertices,edges,crossings,matching_k,cover_k,fan_t,c,s,m,k_lower,t,r,"
         "r_measured,distance_max,distance_bound,host_layered_width,layered_width,tw_G,"
         "walks,cpl,distance,ltw,density,circular,pass\n";
  Json failures = Json::array();
  std::size_t index = 0;
  for (const Json& spec : manifest["instances"]) {
    const std::string id = spec.value("id", "instance" + std::to_string(index));
    std::vector<std::string> suites = spec.value("suites", std::vector<std::string>{"all"});
    for (const auto& s : suites)
      if (std::find(kBenchSuites.begin(), kBenchSuites.end(), s) == kBenchSuites.end())
        throw Error(ErrorKind::InvalidInput, id + ": unknown suite " + s);
    auto want = [&](const std::string& s) {
      return std::find(suites.begin(), suites.end(), s) != suites.end() ||
             std::find(suites.begin(), suites.end(), "all") != suites.end();
    };

    std::optional<TopologicalDrawing> drawing;
    std::optional<std::vector<int>> documented;
    std::string source;
    std::uint64_t seed = base_seed + index;
    if (spec.contains("family")) {
      FamilyParams p;
      p.seed = seed;
      p = params_from_json(spec.value("params", Json::object()), p);
      seed = p.seed;
      source = spec["family"].get<std::string>();
      auto inst = gen_family(source, p);
      drawing = std::move(inst.drawing);
      documented = std::move(inst.colouring);
    } else if (spec.contains("path")) {
      source = spec["path"].get<std::string>();
      drawing = load_drawing(source, io);
    } else {
      throw Error(ErrorKind::InvalidInput, id + ": needs family or path");
    }
    const auto& d = *drawing;
    const Graph& g = d.base();
    auto res = run_pipeline(d, cap);
    auto find = [&](const std::string& name) {
      for (const auto& c : res.report.checks)
        if (c.name == name) return c.pass;
      return false;
    };
    const bool walks = find("planarisation.structure") && find("planarisation.walks");
    const bool cpl = find("cpl.model");
    const bool distance = find("distance <= h(c)");
    const bool ltw = find("shallow.model") && find("host.layered") && find("guest.layered") &&
                     find("ltw(G) <= (4r+1)ltw(host)");
    auto dens = density_check(d);
    std::string circular = "-";
    bool circ_ok = true;
    if (want("circular") && d.circular_order()) {
      const auto colour = documented && !documented->empty() ? *documented
                                                                 : greedy_transparent(d).colour;
      auto br = circular_tw_bound(d, colour, cap);
      circ_ok = br.pass();
      circular = yesno(circ_ok);
    }
    std::string tw = "-";
    if (g.num_vertices() <= cap) tw = std::to_string(exact_treewidth(g, cap).width);

    bool pass = circ_ok;
    auto cell = [&](const char* s, bool v) {
      if (!want(s)) return std::string("-");
      pass = pass && v;
      return yesno(v);
    };
    const auto prof = drawing_profile(d);
    csv << id << ',' << source << ',' << seed << ',' << g.num_vertices() << ','
        << g.num_edges() << ',' << d.num_crossings() << ',' << prof.matching_k << ','
        << prof.cover_k << ',' << prof.fan_t << ',' << res.cp.c << ',' << res.model.s << ','
        << res.model.m << ',' << res.distance.k << ',' << res.model.t << ',' << res.wsm.r
        << ',' << res.wsm.measured << ',' << res.distance.max_observed << ','
        << big_value(res.distance.bound).text << ',' << res.host_ld.layered_width << ','
        << res.guest_ld.layered_width << ',' << tw << ',' << cell("walks", walks) << ','
        << cell("cpl", cpl) << ',' << cell("distance", distance) << ',' << cell("ltw", ltw)
        << ',' << cell("density", dens.pass) << ',' << circular << ',' << yesno(pass) << '\n';
    if (!pass) failures.push_back({{"id", id}, {"report", bound_report_to_json(res.report)}});
    ++index;
  }
  write_text(a.out, csv.str(), io);
  if (!failures.empty())
    fail_with_witness({{"check", "bench"}, {"failures", failures}},
                      witness_path(a.witness, a.manifest), io);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Beyond-planar drawings, coloured planarisations and product structure"};
  app.name("bpk");
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a built-in drawing family");
  g->add_option("family", gen.family, "Family name")->required();
  g->add_option("--n", gen.p.n);
  g->add_option("--m", gen.p.m);
  g->add_option("--k", gen.p.k);
  g->add_option("--a", gen.p.a);
  g->add_option("--b", gen.p.b);
  g->add_option("--bends", gen.p.bends);
  g->add_option("--p", gen.p.p);
  g->add_option("--seed", gen.p.seed);
  g->add_option("--out", gen.out, "Drawing output (- for stdout)");
  g->add_option("--colouring-out", gen.colouring_out, "Write the documented colouring");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Measure drawing parameters");
  c->add_option("file", check.file)->required();
  c->add_option("--k", check.k, "Fail when matching_k exceeds this");
  c->add_flag("--profile", check.profile, "Print every parameter");
  c->add_option("--witness", check.witness);

  ColourArgs colour;
  auto* co = app.add_subcommand("colour", "Transparent ordered edge colouring");
  co->add_option("file", colour.file)->required();
  co->add_option("--method", colour.method)->check(CLI::IsMember({"greedy", "product"}));
  co->add_option("--out", colour.out);

  PlanariseArgs plan;
  auto* p = app.add_subcommand("planarise", "Planarisation and coloured planarisation");
  p->add_option("file", plan.file)->required();
  p->add_option("--colours", plan.colours, "Colouring sidecar");
  p->add_option("--method", plan.method)->check(CLI::IsMember({"greedy", "product"}));
  p->add_flag("--dot", plan.dot, "Emit G^phi as DOT with level labels");
  p->add_option("--out", plan.out);

  ModelArgs model;
  auto* mo = app.add_subcommand("model", "Minor model in G^phi x K_t");
  mo->add_option("file", model.file)->required();
  mo->add_option("--colours", model.colours);
  mo->add_option("--method", model.method)->check(CLI::IsMember({"greedy", "product"}));
  mo->add_option("--out", model.out);
  mo->add_option("--witness", model.witness);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  v->add_option("file", verify.file)->required();
  v->add_option("--suite", verify.suite,
                "walks|cpl|distance|ltw|density|freeness|all");
  v->add_option("--colours", verify.colours);
  v->add_option("--method", verify.method)->check(CLI::IsMember({"greedy", "product"}));
  v->add_option("--cap-tw", verify.cap);
  v->add_option("--witness", verify.witness);

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Treewidth and layered-treewidth bounds");
  b->add_option("file", bounds.file)->required();
  auto* circ = b->add_flag("--circular", bounds.circular);
  b->add_flag("--radius", bounds.radius)->excludes(circ);
  b->add_option("--root", bounds.root, "Spanning tree root for --radius");
  b->add_option("--colours", bounds.colours);
  b->add_option("--method", bounds.method)->check(CLI::IsMember({"greedy", "product"}));
  b->add_flag("--json", bounds.json);
  b->add_option("--cap-tw", bounds.cap);
  b->add_option("--out", bounds.out);
  b->add_option("--witness", bounds.witness);

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "Run a manifest and emit CSV");
  be->add_option("manifest", bench.manifest)->required();
  std::uint64_t seed = 0;
  auto* seed_opt = be->add_option("--seed", seed, "Overrides the manifest seed");
  be->add_option("--cap-tw", bench.cap);
  be->add_option("--out", bench.out);
  be->add_option("--witness", bench.witness);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << "\n";
    return kExitInvalidInput;
  }
  if (seed_opt->count() > 0) bench.seed = seed;

  try {
    if (g->parsed()) return cmd_gen(gen, io);
    if (c->parsed()) return cmd_check(check, io);
    if (co->parsed()) return cmd_colour(colour, io);
    if (p->parsed()) return cmd_planarise(plan, io);
    if (mo->parsed()) return cmd_model(model, io);
    if (v->parsed()) return cmd_verify(verify, io);
    if (b->parsed()) return cmd_bounds(bounds, io);
    if (be->parsed()) return cmd_bench(bench, io);
  } catch (const CheckFailed&) {
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump()
        << "\n";
    if (e.kind() == ErrorKind::CapExceeded) return kExitCapExceeded;
    if (e.kind() == ErrorKind::RadiusExceeded) return kExitCheckFailed;
    return kExitInvalidInput;
  } catch (const Json::exception& e) {
    err << Json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace bpk
