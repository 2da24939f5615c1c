// tiltglue: command-line front end.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "tiltglue/error.hpp"
#include "tiltglue/example.hpp"
#include "tiltglue/glue.hpp"
#include "tiltglue/io.hpp"

using namespace tiltglue;

namespace {

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  std::optional<Scalar> prime;
  std::optional<std::string> data_dir;
  std::size_t cap = kDefaultCap;

  Settings settings() const { return {seed, cap}; }
};

constexpr int kOk = 0;
constexpr int kMismatch = 2;

// Explicit data dir first, then the filesystem relative to the working directory, then the bundled copy.
Workspace workspace_for(const Globals& g, const std::string& path) {
  if (g.data_dir) return Workspace(DataSource(*g.data_dir), g.prime);
  if (std::filesystem::exists(path)) return Workspace(DataSource(std::filesystem::current_path()), g.prime);
  return Workspace(DataSource(), g.prime);
}

int mismatch(const std::string& what) {
  std::cout << what << "\nreason: VERIFICATION_FAILED\n";
  return kMismatch;
}

std::string dims_of(const Module& m) {
  std::string s;
  for (std::size_t v = 0; v < m.dims().size(); ++v) s += (v ? "," : "") + std::to_string(m.dim(v));
  return "(" + s + ")";
}

Module members_sum(const Universe& u, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(u.index_of_name(n));
  return sum_of_members(u, idx);
}

std::string describe_in(const Universe* u, const Module& m, std::uint64_t seed) {
  if (m.is_zero()) return "0";
  if (!u) return dims_of(m);
  std::string s;
  for (auto i : u->identify_summands(m, seed)) s += (s.empty() ? "" : " + ") + u->member_name(i);
  return s;
}

int cmd_check_algebra(const Globals& g, const std::string& path) {
  Workspace ws = workspace_for(g, path);
  const AlgebraPtr a = ws.algebra(path);
  const auto& q = a->quiver();
  std::cout << print_algebra(*a);
  std::cout << "dimension " << a->dimension() << "\n";
  for (std::size_t s = 0; s < q.vertex_count(); ++s)
    for (std::size_t t = 0; t < q.vertex_count(); ++t) {
      const auto& b = a->basis_between(s, t);
      if (b.empty()) continue;
      std::cout << "  " << q.vertex_name(s) << " -> " << q.vertex_name(t) << ":";
      for (auto i : b) std::cout << ' ' << a->path_word(a->basis_path(i));
      std::cout << "\n";
    }
  const auto gd = global_dimension(a, g.cap);
  std::cout << "global dimension " << (gd ? std::to_string(*gd) : "> " + std::to_string(g.cap)) << "\n";
  const AlgebraPtr again = parse_algebra(print_algebra(*a));
  if (!same_algebra(a, again)) return mismatch("printed form does not parse back to the same algebra");
  return kOk;
}

int cmd_ext(const Globals& g, const std::string& manifest, const std::string& x, const std::string& y,
            std::size_t max_degree) {
  Workspace ws = workspace_for(g, manifest);
  const auto u = ws.universe(manifest);
  const Module& mx = u->member(u->index_of_name(x));
  const Module& my = u->member(u->index_of_name(y));
  bool agree = true;
  for (std::size_t i = 1; i <= max_degree; ++i) {
    const auto a = ext_dim(mx, my, i), b = ext_dim_sigma(mx, my, i);
    std::cout << "dim Ext^" << i << "(" << x << ", " << y << ") = " << a;
    if (a != b) {
      std::cout << " (cosyzygy route gives " << b << ")";
      agree = false;
    }
    std::cout << "\n";
  }
  return agree ? kOk : mismatch("the two Ext routes disagree");
}

int cmd_check(const Globals& g, const std::string& manifest, std::size_t n, const std::vector<std::string>& names,
              bool cotilting) {
  Workspace ws = workspace_for(g, manifest);
  const auto u = ws.universe(manifest);
  const Module t = members_sum(*u, names);
  const TiltingReport r = cotilting ? verify_cotilting(t, n, g.settings()) : verify_tilting(t, n, g.settings());
  std::cout << (cotilting ? "id T = " : "pd T = ") << (r.dimension ? std::to_string(*r.dimension) : "unbounded")
            << "\n";
  for (std::size_t i = 0; i < r.self_ext.size(); ++i)
    std::cout << "dim Ext^" << i + 1 << "(T, T) = " << r.self_ext[i] << "\n";
  for (std::size_t v = 0; v < r.sequences.size(); ++v) {
    const auto& s = r.sequences[v];
    std::cout << (cotilting ? "I(" : "P(") << u->algebra()->quiver().vertex_name(v) << "): ";
    if (!s.accepted) {
      std::cout << s.reason << "\n";
      continue;
    }
    for (std::size_t k = 0; k < s.terms.size(); ++k)
      std::cout << (k ? (cotilting ? " <- " : " -> ") : "") << describe_in(u.get(), s.terms[k], g.seed);
    std::cout << "\n";
  }
  std::cout << n << (cotilting ? "-cotilting: " : "-tilting: ") << (r.accepted ? "yes" : "no") << "\n";
  if (!r.accepted) return mismatch(r.failed_axiom + ": " + r.detail);
  return kOk;
}

int cmd_cotorsion(const Globals& g, const std::string& manifest, std::size_t n, const std::vector<std::string>& names,
                  bool cotilting) {
  Workspace ws = workspace_for(g, manifest);
  const auto u = ws.universe(manifest);
  const Module t = members_sum(*u, names);
  const CotorsionPair p = cotilting ? cotorsion_pair_from_cotilting(t, n, u, g.settings())
                                    : cotorsion_pair_from_tilting(t, n, u, g.settings());
  std::cout << "U = " << u->describe(p.u) << "\nV = " << u->describe(p.v) << "\n";
  std::cout << "hereditary: " << (p.hereditary ? "yes" : "no") << "\n";
  const PairCheck c = check_cotorsion_pair(p, g.settings());
  for (const auto& f : c.failures) std::cout << "  " << f << "\n";
  const auto rec = cotilting ? is_cotilting_cotorsion_pair(p, g.settings()) : is_tilting_cotorsion_pair(p, g.settings());
  std::cout << (cotilting ? "cotilting" : "tilting") << " pair: " << (rec.accepted ? "yes" : "no") << ", U cap V = "
            << u->describe(rec.t_members) << ", n = " << rec.n << "\n";
  if (!c.ok || !rec.accepted) return mismatch(rec.accepted ? "pair axioms fail" : rec.reason);
  return kOk;
}

int cmd_recollement(const Globals& g, const std::string& manifest, const std::vector<std::string>& a_names,
                    const std::optional<std::string>& a_manifest, const std::optional<std::string>& c_manifest) {
  Workspace ws = workspace_for(g, manifest);
  const auto u = ws.universe(manifest);
  const auto ua = a_manifest ? ws.universe(*a_manifest) : nullptr;
  const auto uc = c_manifest ? ws.universe(*c_manifest) : nullptr;
  std::vector<std::size_t> av;
  for (const auto& n : a_names) av.push_back(u->algebra()->quiver().vertex_index(n));
  const Recollement r = Recollement::build(u->algebra(), av, ua ? ua->algebra() : nullptr,
                                           uc ? uc->algebra() : nullptr);
  auto cert = [](const ExactnessCertificate& c) {
    std::string s = c.exact ? "exact" : "not exact";
    s += " [";
    for (std::size_t i = 0; i < c.defects.size(); ++i) s += (i ? " " : "") + std::to_string(c.defects[i]);
    return s + "]";
  };
  std::cout << "i^* " << cert(r.exactness().i_upper_star) << "\n";
  std::cout << "i^! " << cert(r.exactness().i_shriek) << "\n";
  std::cout << "j_! " << cert(r.exactness().j_lower_shriek) << "\n";
  std::cout << "j_* " << cert(r.exactness().j_star) << "\n";
  bool ok = true;
  for (std::size_t i = 0; i < u->size(); ++i) {
    const Module& m = u->member(i);
    const auto up = r.canonical_sequence_upper(m);
    const auto low = r.canonical_sequence_lower(m);
    const bool up_ok = up.left_injective && up.middle_exact && up.right_surjective;
    // The lower sequence is right exact; its left end is injective when i^* is exact.
    const bool low_ok = low.middle_exact && low.right_surjective &&
                        (!r.exactness().i_upper_star.exact || low.left_injective);
    ok = ok && up_ok && low_ok;
    std::cout << u->member_name(i) << ": i^* = " << describe_in(ua.get(), r.i_upper_star(m), g.seed)
              << ", i^! = " << describe_in(ua.get(), r.i_shriek(m), g.seed)
              << ", j^* = " << describe_in(uc.get(), r.j_upper_star(m), g.seed)
              << ", sequences " << (up_ok && low_ok ? "exact" : "NOT exact") << "\n";
  }
  if (uc)
    for (std::size_t i = 0; i < uc->size(); ++i)
      std::cout << "j_!" << uc->member_name(i) << " = " << describe_in(u.get(), r.j_lower_shriek(uc->member(i)), g.seed)
                << ", j_*" << uc->member_name(i) << " = " << describe_in(u.get(), r.j_star(uc->member(i)), g.seed)
                << "\n";
  if (ua)
    for (std::size_t i = 0; i < ua->size(); ++i)
      std::cout << "i_*" << ua->member_name(i) << " = " << describe_in(u.get(), r.i_star(ua->member(i)), g.seed)
                << "\n";
  return ok ? kOk : mismatch("a canonical sequence is not exact where it should be");
}

int cmd_glue(const Globals& g, const std::string& path, GlueKind kind) {
  Workspace ws = workspace_for(g, path);
  LoadedExample ex = load_example(ws, path);
  ex.setup.kind = kind;
  const GlueOutcome out = run_glue(ex, g.settings());
  std::cout << out.report;
  return out.certified ? kOk : mismatch("the glued module failed its certificates");
}

int cmd_reproduce(const Globals& g, const std::string& id) {
  Workspace ws = g.data_dir ? Workspace(DataSource(*g.data_dir), g.prime) : Workspace(DataSource(), g.prime);
  const Reproduction rp = reproduce(ws, example_path(id), g.settings());
  std::cout << rp.report;
  if (rp.error) {
    std::cout << "reason: " << to_string(*rp.error) << "\n";
    return exit_code_for(*rp.error);
  }
  if (!rp.match) {
    std::cout << "reason: VERIFICATION_FAILED\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_verify_universe(const Globals& g, const std::string& manifest, std::optional<std::size_t> expect_count) {
  Workspace ws = workspace_for(g, manifest);
  const auto u = ws.universe(manifest);
  const AlgebraPtr& a = u->algebra();
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < u->size(); ++i) {
    std::cout << u->member_name(i) << " " << dims_of(u->member(i)) << "\n";
    if (!is_indecomposable(u->member(i))) problems.push_back(u->member_name(i) + " is decomposable");
    for (std::size_t j = 0; j < i; ++j)
      if (u->member(i).dims() == u->member(j).dims() && is_isomorphic(u->member(i), u->member(j), g.seed))
        problems.push_back(u->member_name(i) + " is isomorphic to " + u->member_name(j));
  }
  // Closure: the universe must contain the summands of projectives, injectives, syzygies and cosyzygies.
  auto covered = [&](const Module& m, const std::string& what) {
    try {
      u->identify_summands(m, g.seed);
    } catch (const Error& e) {
      problems.push_back(what + ": " + e.what());
    }
  };
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    covered(projective_module(a, v), "P(" + a->quiver().vertex_name(v) + ")");
    covered(injective_module(a, v), "I(" + a->quiver().vertex_name(v) + ")");
  }
  for (std::size_t i = 0; i < u->size(); ++i) {
    covered(syzygy(u->member(i), 1), "syzygy of " + u->member_name(i));
    covered(cosyzygy(u->member(i), 1), "cosyzygy of " + u->member_name(i));
  }
  if (expect_count && *expect_count != u->size())
    problems.push_back(std::to_string(u->size()) + " members, expected " + std::to_string(*expect_count));
  std::cout << u->size() << " members over " << a->name() << "\n";
  for (const auto& p : problems) std::cout << "  " << p << "\n";
  return problems.empty() ? kOk : mismatch("universe check failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tilting modules glued along recollements of module categories"};
  app.require_subcommand(1);
  Globals g;
  std::optional<Scalar> prime;
  std::string data_dir;
  app.add_option("--seed", g.seed, "Seed for randomized decomposition steps")->capture_default_str();
  app.add_option("--prime", prime, "Override the field characteristic of every algebra file");
  app.add_option("--data-dir", data_dir, "Read data files from this directory");
  app.add_option("--cap", g.cap, "Bound for projective and injective dimension searches")->capture_default_str();

  std::string path, x, y, id;
  std::size_t n = 0, max_degree = 4;
  std::vector<std::string> names;
  std::optional<std::string> a_manifest, c_manifest;
  std::optional<std::size_t> expect_count;
  bool cotilting_pair = false;

  auto* check_algebra = app.add_subcommand("check-algebra", "Parse an algebra file and print its basis");
  check_algebra->add_option("file", path)->required();

  auto* ext = app.add_subcommand("ext", "Ext dimensions between two universe members");
  ext->add_option("universe", path)->required();
  ext->add_option("x", x)->required();
  ext->add_option("y", y)->required();
  ext->add_option("--max-degree", max_degree)->capture_default_str();

  auto* check_tilting = app.add_subcommand("check-tilting", "Verify that a sum of members is n-tilting");
  auto* check_cotilting = app.add_subcommand("check-cotilting", "Verify that a sum of members is n-cotilting");
  for (auto* c : {check_tilting, check_cotilting}) {
    c->add_option("universe", path)->required();
    c->add_option("n", n)->required();
    c->add_option("members", names)->required();
  }

  auto* cotorsion = app.add_subcommand("cotorsion", "Cotorsion pair of a tilting or cotilting module");
  cotorsion->add_option("universe", path)->required();
  cotorsion->add_option("n", n)->required();
  cotorsion->add_option("members", names)->required();
  cotorsion->add_flag("--cotilting", cotilting_pair, "Treat the module as cotilting");

  auto* recollement = app.add_subcommand("recollement", "Functors and exactness for a vertex cut");
  recollement->add_option("universe", path)->required();
  recollement->add_option("--a-vertices", names, "Vertices of the quotient side")->required();
  recollement->add_option("--a-universe", a_manifest);
  recollement->add_option("--c-universe", c_manifest);

  auto* glue_tilting_cmd = app.add_subcommand("glue-tilting", "Glue tilting modules described by an example file");
  glue_tilting_cmd->add_option("example", path)->required();
  auto* glue_cotilting_cmd = app.add_subcommand("glue-cotilting", "Glue cotilting modules described by an example file");
  glue_cotilting_cmd->add_option("example", path)->required();

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a bundled example and compare with the expected module");
  reproduce_cmd->add_option("id", id)->required()->check(CLI::IsMember({"5-1", "5-2"}));

  auto* verify_universe = app.add_subcommand("verify-universe", "Check that a universe is consistent");
  verify_universe->add_option("universe", path)->required();
  verify_universe->add_option("--expect-count", expect_count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }
  g.prime = prime;
  if (!data_dir.empty()) g.data_dir = data_dir;

  try {
    if (*check_algebra) return cmd_check_algebra(g, path);
    if (*ext) return cmd_ext(g, path, x, y, max_degree);
    if (*check_tilting) return cmd_check(g, path, n, names, false);
    if (*check_cotilting) return cmd_check(g, path, n, names, true);
    if (*cotorsion) return cmd_cotorsion(g, path, n, names, cotilting_pair);
    if (*recollement) return cmd_recollement(g, path, names, a_manifest, c_manifest);
    if (*glue_tilting_cmd) return cmd_glue(g, path, GlueKind::Tilting);
    if (*glue_cotilting_cmd) return cmd_glue(g, path, GlueKind::Cotilting);
    if (*reproduce_cmd) return cmd_reproduce(g, id);
    if (*verify_universe) return cmd_verify_universe(g, path, expect_count);
  } catch (const Error& e) {
    std::cout << "error: " << e.what() << "\nreason: " << to_string(e.code()) << "\n";
    return exit_code_for(e.code());
  }
  return 3;
}
