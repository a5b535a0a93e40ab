#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"
#include "schur/errors.hpp"
#include "schur/io.hpp"
#include "schur/isomorphism.hpp"
#include "schur/verify.hpp"
#include "schur/wl.hpp"

using namespace schur;
using nlohmann::ordered_json;

namespace {

struct Global {
  std::string format = "text";
  int threads = 1;
  std::uint64_t seed = VerifyOptions{}.seed;

  bool machine() const { return format == "machine"; }
  Exec exec() const { return Exec{threads}; }
};

void print_json(const ordered_json& j) { std::cout << j.dump() << "\n"; }

std::string ring_line(const SRing& ring) {
  return "group=" + ring.group().spec() + " rank=" + std::to_string(ring.rank()) + " classes=" + class_list_text(ring);
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::uint32_t> parse_index_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t pos = 0;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a comma-separated list of non-negative integers", pos);
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    pos += item.size() + 1;
  }
  return out;
}

std::vector<GroupMorphism> generated_automorphisms(const AbelianGroup& g, const std::vector<GroupMorphism>& gens) {
  std::vector<GroupMorphism> all{GroupMorphism::identity(g)};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto& s : gens) {
      auto next = s.after(all[i]);
      if (std::find(all.begin(), all.end(), next) == all.end()) all.push_back(std::move(next));
    }
  }
  return all;
}

int cmd_enumerate(const Global& gl, const std::string& spec, const std::string& out_dir) {
  const auto group = AbelianGroup::parse(spec);
  const auto rings = enumerate_srings(group, gl.exec());
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < rings.size(); ++i)
      write_sring_file((std::filesystem::path(out_dir) / (group.spec() + "_" + std::to_string(i) + ".json")).string(),
                       rings[i]);
  }
  if (gl.machine()) {
    ordered_json j;
    j["group"] = group.spec();
    j["count"] = rings.size();
    j["srings"] = ordered_json::array();
    for (auto& r : rings) j["srings"].push_back(to_json(r));
    print_json(j);
  } else {
    std::cout << "count=" << rings.size() << "\n";
    for (std::size_t i = 0; i < rings.size(); ++i) std::cout << "[" << i << "] " << ring_line(rings[i]) << "\n";
  }
  return 0;
}

int cmd_validate(const Global& gl, const std::string& path) {
  try {
    const auto ring = read_sring_file(path);
    if (gl.machine()) {
      ordered_json j;
      j["valid"] = true;
      j["sring"] = to_json(ring);
      j["rank"] = ring.rank();
      print_json(j);
    } else {
      std::cout << "valid " << ring_line(ring) << "\n";
    }
    return 0;
  } catch (const SchurError& e) {
    if (e.code() == ErrorCode::Parse || e.code() == ErrorCode::Usage || e.code() == ErrorCode::Capacity) throw;
    if (gl.machine()) {
      ordered_json j;
      j["valid"] = false;
      j["error"] = to_string(e.code());
      j["message"] = e.what();
      print_json(j);
    } else {
      std::cout << "invalid " << to_string(e.code()) << ": " << e.what() << "\n";
    }
    return 1;
  }
}

int emit_ring(const Global& gl, const SRing& ring, const std::string& out) {
  if (!out.empty()) write_sring_file(out, ring);
  if (gl.machine())
    print_json(to_json(ring));
  else
    std::cout << ring_line(ring) << "\n";
  return 0;
}

int cmd_closure(const Global& gl, const std::string& spec, const std::vector<std::string>& sets,
                const std::string& out) {
  const auto group = AbelianGroup::parse(spec);
  std::vector<GroupRingVector> seeds;
  for (auto& s : sets) seeds.push_back(GroupRingVector::indicator(parse_element_list(s, group.order())));
  return emit_ring(gl, schur_closure(group, seeds), out);
}

int cmd_iso(const Global& gl, const std::string& kind, const std::string& a_path, const std::string& b_path,
            std::size_t limit, const std::string& phi_text, bool cayley_first) {
  auto a = std::make_shared<const SRing>(read_sring_file(a_path));
  auto b = std::make_shared<const SRing>(read_sring_file(b_path));
  ordered_json j;
  j["kind"] = kind;
  j["source"] = to_json(*a);
  j["target"] = to_json(*b);
  if (kind == "algebraic") {
    auto isos = algebraic_isos(a, b);
    if (limit && isos.size() > limit) isos.resize(limit);
    j["count"] = isos.size();
    j["maps"] = ordered_json::array();
    for (auto& phi : isos) j["maps"].push_back(phi.map);
    if (!gl.machine()) {
      std::cout << "count=" << isos.size() << "\n";
      for (auto& phi : isos) std::cout << "class_map=" << join(phi.map) << "\n";
    }
  } else if (kind == "cayley" || kind == "combinatorial") {
    auto isos = kind == "cayley" ? cayley_isos(*a, *b) : combinatorial_isos(*a, *b, limit);
    if (limit && isos.size() > limit) isos.resize(limit);
    j["count"] = isos.size();
    j["maps"] = ordered_json::array();
    for (auto& f : isos) j["maps"].push_back(f.map);
    if (!gl.machine()) {
      std::cout << "count=" << isos.size() << "\n";
      for (auto& f : isos) std::cout << "map=" << join(f.map) << "\n";
    }
  } else {
    AlgebraicIso phi{a, b, parse_index_list(phi_text)};
    if (phi.map.size() != a->rank() || !is_algebraic_iso(*a, *b, phi.map))
      throw SchurError(ErrorCode::Usage, "--phi is not an algebraic isomorphism between the given S-rings");
    const auto f = find_inducing_isomorphism(phi, InduceOptions{cayley_first});
    j["class_map"] = phi.map;
    j["induced"] = f.has_value();
    if (f)
      j["map"] = f->map;
    else
      j["map"] = nullptr;
    if (!gl.machine()) std::cout << (f ? "induced map=" + join(f->map) : std::string("not induced")) << "\n";
    if (gl.machine()) print_json(j);
    return f ? 0 : 1;
  }
  if (gl.machine()) print_json(j);
  return 0;
}

int cmd_aut(const Global& gl, const std::string& path, std::size_t limit) {
  const auto ring = read_sring_file(path);
  const auto order = aut_sring_order(ring);
  std::vector<CombinatorialIso> listed;
  if (limit) listed = aut_sring(ring, limit);
  if (gl.machine()) {
    ordered_json j;
    j["sring"] = to_json(ring);
    j["order"] = to_string(order);
    j["listed"] = ordered_json::array();
    for (auto& f : listed) j["listed"].push_back(f.map);
    print_json(j);
  } else {
    std::cout << "order=" << to_string(order) << "\n";
    for (auto& f : listed) std::cout << "map=" << join(f.map) << "\n";
  }
  return 0;
}

int cmd_separability(const Global& gl, const std::string& spec, const std::string& path) {
  std::vector<SRing> subjects;
  std::size_t order = 0;
  if (!path.empty()) {
    subjects.push_back(read_sring_file(path));
    order = subjects.front().group().order();
  } else {
    if (spec.empty()) throw SchurError(ErrorCode::Usage, "separability needs a group spec or --sring");
    const auto group = AbelianGroup::parse(spec);
    subjects = enumerate_srings(group, gl.exec());
    order = group.order();
  }
  std::vector<SRingRef> targets;
  for (auto& g : abelian_groups_of_order(order))
    for (auto& r : enumerate_srings(g, gl.exec())) targets.push_back(std::make_shared<const SRing>(std::move(r)));
  bool all = true;
  ordered_json reports = ordered_json::array();
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    const auto r = separability_check(subjects[i], targets, gl.exec());
    all = all && r.separable;
    if (gl.machine()) {
      reports.push_back(to_json(r));
    } else {
      std::cout << "[" << i << "] " << ring_line(subjects[i]) << " algebraic_isos=" << r.entries.size() << " "
                << (r.separable ? "separable" : "NOT separable") << "\n";
      for (auto& e : r.entries)
        if (!e.inducing)
          std::cout << "  witness: target " << ring_line(*e.target) << " class_map=" << join(e.phi) << "\n";
    }
  }
  if (gl.machine()) {
    ordered_json j;
    j["order"] = order;
    j["srings"] = subjects.size();
    j["separable"] = all;
    j["reports"] = std::move(reports);
    print_json(j);
  } else {
    std::cout << "srings=" << subjects.size() << " " << (all ? "separable" : "NOT separable") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_wl_refine(const Global& gl, const std::string& spec, const std::string& set) {
  const auto group = AbelianGroup::parse(spec);
  const auto x = parse_element_list(set, group.order());
  const auto stable = wl2_refine(cayley_graph(group, x));
  auto labels = wl_partition_of_group(group, stable);
  detail::canonicalize_labels(labels);
  const auto ring = sring_from_labels(group, labels);
  if (gl.machine()) {
    auto j = to_json(stable);
    j["group_partition"] = to_json(ring);
    print_json(j);
  } else {
    std::cout << "rounds=" << stable.rounds << " colors=" << stable.histogram.size() << "\n";
    std::cout << "group partition: " << ring_line(ring) << "\n";
  }
  return 0;
}

int cmd_wl_experiment(const Global& gl, std::size_t order, bool directed) {
  const auto r = wl_dimension_experiment(order, directed, gl.exec());
  if (gl.machine()) {
    print_json(to_json(r));
  } else {
    std::cout << "order=" << r.order << (r.directed ? " directed" : " undirected") << "\n";
    for (std::size_t i = 0; i < r.groups.size(); ++i)
      std::cout << "  " << r.groups[i] << " graphs=" << r.graphs_per_group[i] << "\n";
    std::cout << "graphs=" << r.graph_count << " pairs=" << r.pair_count << " fingerprint_classes="
              << r.fingerprint_classes << " oracle_calls=" << r.oracle_calls
              << " wl_indistinguishable_nonisomorphic=" << r.indistinguishable_nonisomorphic.size() << "\n";
  }
  return r.indistinguishable_nonisomorphic.empty() ? 0 : 1;
}

int cmd_verify(const Global& gl, const std::string& primes, const std::string& skip, VerifyOptions o) {
  o.primes = parse_index_list(primes);
  if (!skip.empty()) {
    std::stringstream ss(skip);
    std::string item;
    while (std::getline(ss, item, ',')) o.skip.insert(item);
  }
  o.seed = gl.seed;
  o.exec = gl.exec();
  std::function<void(const CheckResult&)> sink;
  if (!gl.machine()) sink = [](const CheckResult& r) { std::cout << r.line() << std::endl; };
  const auto report = run_verification(o, sink);
  if (gl.machine()) {
    ordered_json j;
    j["primes"] = o.primes;
    j["seed"] = o.seed;
    j["ok"] = report.ok();
    j["checks"] = ordered_json::array();
    for (auto& c : report.checks) {
      ordered_json x;
      x["key"] = c.key;
      x["detail"] = c.detail;
      x["status"] = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIPPED";
      j["checks"].push_back(std::move(x));
    }
    print_json(j);
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over finite abelian groups"};
  app.require_subcommand(1);
  Global gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--threads", gl.threads, "Worker threads (1 = serial)")->check(CLI::Range(1, 1024));
  app.add_option("--seed", gl.seed, "Seed for randomized checks");
  std::function<int()> run;

  auto* enumerate = app.add_subcommand("enumerate", "All S-rings over a group up to Cayley isomorphism");
  std::string spec, out, path, path_b;
  enumerate->add_option("group", spec, "Group spec, e.g. C2xC2xC2")->required();
  enumerate->add_option("--out", out, "Directory for one JSON file per S-ring");
  enumerate->callback([&] { run = [&] { return cmd_enumerate(gl, spec, out); }; });

  auto* validate = app.add_subcommand("validate", "Check the S-ring axioms for a partition file");
  validate->add_option("file", path, "S-ring JSON file")->required();
  validate->callback([&] { run = [&] { return cmd_validate(gl, path); }; });

  auto* closure = app.add_subcommand("closure", "Smallest S-ring containing the given sets");
  std::vector<std::string> sets;
  closure->add_option("group", spec, "Group spec")->required();
  closure->add_option("--set", sets, "Comma-separated element indices; repeatable")->required();
  closure->add_option("--out", out, "Write the result as JSON");
  closure->callback([&] { run = [&] { return cmd_closure(gl, spec, sets, out); }; });

  auto* product = app.add_subcommand("product", "Constructions");
  product->require_subcommand(1);
  auto* tensor = product->add_subcommand("tensor", "Tensor product of two S-rings");
  tensor->add_option("first", path, "S-ring file")->required();
  tensor->add_option("second", path_b, "S-ring file")->required();
  tensor->add_option("--out", out, "Write the result as JSON");
  tensor->callback([&] {
    run = [&] { return emit_ring(gl, tensor_product(read_sring_file(path), read_sring_file(path_b)), out); };
  });
  auto* wreath = product->add_subcommand("wreath", "Wreath product over a subgroup L");
  std::string lower;
  wreath->add_option("lower_ring", path, "S-ring over L")->required();
  wreath->add_option("upper_ring", path_b, "S-ring over G/L")->required();
  wreath->add_option("--group", spec, "Group G")->required();
  wreath->add_option("--lower", lower, "Elements of L, comma-separated")->required();
  wreath->add_option("--out", out, "Write the result as JSON");
  wreath->callback([&] {
    run = [&] {
      const auto g = AbelianGroup::parse(spec);
      const auto l = Subgroup::from_set(g, parse_element_list(lower, g.order()));
      return emit_ring(gl, wreath_product(read_sring_file(path), read_sring_file(path_b), g, l), out);
    };
  });
  auto* cyclo = product->add_subcommand("cyclotomic", "Orbit S-ring of the automorphism group generated by --aut");
  std::vector<std::string> auts;
  cyclo->add_option("group", spec, "Group spec")->required();
  cyclo->add_option("--aut", auts, "Generator images of one automorphism, comma-separated; repeatable");
  cyclo->add_option("--out", out, "Write the result as JSON");
  cyclo->callback([&] {
    run = [&] {
      const auto g = AbelianGroup::parse(spec);
      std::vector<GroupMorphism> gens;
      for (auto& a : auts) {
        auto m = GroupMorphism::from_generator_images(g, g, parse_index_list(a));
        if (!m.is_bijective()) throw SchurError(ErrorCode::Usage, "--aut " + a + " is not bijective");
        gens.push_back(std::move(m));
      }
      return emit_ring(gl, cyclotomic(generated_automorphisms(g, gens), g), out);
    };
  });
  auto* subdirect = product->add_subcommand("subdirect", "A(C_u, C_v, psi) with psi(1) = --psi in C_v/W");
  std::uint32_t u = 1, v = 1, psi_image = 0;
  subdirect->add_option("--u", u, "Order of U")->required();
  subdirect->add_option("--v", v, "Order of V")->required();
  subdirect->add_option("--psi", psi_image, "Image of the generator of U in V/W (element index)")->required();
  subdirect->callback([&] {
    run = [&] {
      if (u == 0 || v == 0 || v % u) throw SchurError(ErrorCode::Usage, "|U| must divide |V|");
      const AbelianGroup cu({u}), cv({v});
      const auto sec = quotient(cv, Subgroup::whole(cv), cyclic_subgroup_of_index(cv, u));
      if (psi_image >= sec.quotient.order()) throw SchurError(ErrorCode::Usage, "--psi out of range");
      const auto psi = GroupMorphism::from_generator_images(cu, sec.quotient, {psi_image});
      const auto a = subdirect_product(cu, cv, psi);
      const auto ambient = AbelianGroup({u, v});
      if (gl.machine()) {
        ordered_json j;
        j["ambient"] = ambient.spec();
        j["order"] = a.order();
        j["elements"] = a.elements().elements();
        print_json(j);
      } else {
        std::cout << "ambient=" << ambient.spec() << " order=" << a.order() << " elements=" << join(a.elements().elements())
                  << "\n";
      }
      return 0;
    };
  });
  auto* family = product->add_subcommand("family", "Family S-ring from a descriptor family:i=..,p=..,k=..");
  bool use_xi = false;
  family->add_option("descriptor", spec, "Family descriptor")->required();
  family->add_flag("--xi", use_xi, "Use the second subdirect product (i = 1)");
  family->add_option("--out", out, "Write the result as JSON");
  family->callback([&] {
    run = [&] { return emit_ring(gl, build_family(FamilyDescriptor::parse(spec), use_xi), out); };
  });

  auto* iso = app.add_subcommand("iso", "Isomorphisms between two S-rings");
  iso->require_subcommand(1);
  std::size_t limit = 0;
  std::string phi_text;
  bool cayley_first = false;
  for (const char* kind : {"algebraic", "cayley", "combinatorial", "induce"}) {
    auto* sub = iso->add_subcommand(kind, std::string(kind) + " isomorphisms");
    sub->add_option("source", path, "S-ring file")->required();
    sub->add_option("target", path_b, "S-ring file")->required();
    if (std::string(kind) == "induce") {
      sub->add_option("--phi", phi_text, "Class map, comma-separated")->required();
      sub->add_flag("--cayley-first", cayley_first, "Try Cayley isomorphisms first");
    } else {
      sub->add_option("--limit", limit, "Stop after this many (0 = all)");
    }
    const std::string k = kind;
    sub->callback([&, k] { run = [&, k] { return cmd_iso(gl, k, path, path_b, limit, phi_text, cayley_first); }; });
  }

  auto* aut = app.add_subcommand("aut", "Automorphism group of an S-ring");
  aut->add_option("file", path, "S-ring file")->required();
  aut->add_option("--list", limit, "Also list this many automorphisms");
  aut->callback([&] { run = [&] { return cmd_aut(gl, path, limit); }; });

  auto* sep = app.add_subcommand("separability", "Separability of every S-ring over a group, or of one S-ring");
  sep->add_option("group", spec, "Group spec");
  sep->add_option("--sring", path, "S-ring file");
  sep->callback([&] { run = [&] { return cmd_separability(gl, spec, path); }; });

  auto* wl = app.add_subcommand("wl", "2-dimensional Weisfeiler-Leman");
  wl->require_subcommand(1);
  auto* refine = wl->add_subcommand("refine", "Stable colouring of a Cayley graph");
  std::string set;
  refine->add_option("group", spec, "Group spec")->required();
  refine->add_option("--set", set, "Connection set, comma-separated")->required();
  refine->callback([&] { run = [&] { return cmd_wl_refine(gl, spec, set); }; });
  auto* experiment = wl->add_subcommand("experiment", "All Cayley graphs over all abelian groups of an order");
  std::size_t order = 0;
  bool directed = false;
  experiment->add_option("--order", order, "Group order")->required();
  experiment->add_flag("--directed", directed, "Use every connection set, not only inverse-closed ones");
  experiment->callback([&] { run = [&] { return cmd_wl_experiment(gl, order, directed); }; });

  auto* verify = app.add_subcommand("paper-verify", "Run the verification battery");
  std::string primes = "2,3,5,7", skip;
  VerifyOptions vopts;
  verify->add_option("--wl-max-order", vopts.wl_max_order, "Largest order for the 2-WL experiment");
  verify->add_option("--uniq-instances", vopts.uniq_instances, "Random instances for the extension check");
  verify->add_option("--primes", primes, "Comma-separated primes p (groups of order 4p)");
  verify->add_option("--skip", skip, "Comma-separated checks to skip");
  verify->callback([&] { run = [&] { return cmd_verify(gl, primes, skip, vopts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run();
  } catch (const SchurError& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
