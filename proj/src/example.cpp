#include "tiltglue/example.hpp"

#include <algorithm>
#include <sstream>

namespace tiltglue {

namespace {

std::vector<std::string> words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t parse_degree(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected a degree, got '" + s + "'");
}

std::string plus_join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " + " : "") + xs[i];
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string certificate(const ExactnessCertificate& c) {
  if (c.exact) return "yes";
  std::string s = "no (defects";
  for (auto d : c.defects) s += " " + std::to_string(d);
  return s + ")";
}

std::vector<std::string> names_of(const Universe& u, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(u.member_name(i));
  return out;
}

Module sum_by_names(const Universe& u, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) {
    const auto i = u.find_name(n);
    if (!i) throw Error(ErrorCode::UnknownName, "'" + n + "' is not a member of universe " + u.name());
    idx.push_back(*i);
  }
  return sum_of_members(u, idx);
}

std::string dimension_text(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : "unbounded"; }

}  // namespace

ExampleSetup parse_example(std::string_view text) {
  ExampleSetup s;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  bool have_t1 = false, have_t3 = false;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    const auto w = words(raw);
    if (w.empty()) continue;
    auto need = [&](std::size_t n) {
      if (w.size() < n)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": '" + w[0] + "' needs arguments");
    };
    const std::string& kw = w[0];
    if (kw == "example") {
      need(2);
      s.id = w[1];
    } else if (kw == "glue") {
      need(2);
      if (w[1] == "tilting") s.kind = GlueKind::Tilting;
      else if (w[1] == "cotilting") s.kind = GlueKind::Cotilting;
      else throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": glue tilting|cotilting");
    } else if (kw == "total") {
      need(2);
      s.total = w[1];
    } else if (kw == "a-side") {
      need(2);
      s.a_side = w[1];
    } else if (kw == "c-side") {
      need(2);
      s.c_side = w[1];
    } else if (kw == "a-vertices") {
      need(2);
      s.a_vertices.assign(w.begin() + 1, w.end());
    } else if (kw == "t1" || kw == "t3") {
      need(3);
      auto& target = kw == "t1" ? s.t1 : s.t3;
      (kw == "t1" ? s.n1 : s.n3) = parse_degree(w[1], number);
      target.assign(w.begin() + 2, w.end());
      (kw == "t1" ? have_t1 : have_t3) = true;
    } else if (kw == "expect") {
      s.expect.assign(w.begin() + 1, w.end());
    } else if (kw == "expect-n") {
      need(2);
      s.expect_n = parse_degree(w[1], number);
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": unknown keyword '" + kw + "'");
    }
  }
  if (s.total.empty() || s.a_side.empty() || s.c_side.empty() || s.a_vertices.empty() || !have_t1 || !have_t3)
    throw Error(ErrorCode::ParseError, "example needs total, a-side, c-side, a-vertices, t1 and t3");
  return s;
}

LoadedExample load_example(Workspace& ws, const std::string& path) {
  ExampleSetup setup;
  try {
    setup = parse_example(ws.source().read(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
  UniverseTriple u{ws.universe(resolve_path(path, setup.total)), ws.universe(resolve_path(path, setup.a_side)),
                   ws.universe(resolve_path(path, setup.c_side))};
  std::vector<std::size_t> a_vertices;
  for (const auto& v : setup.a_vertices) {
    const auto i = u.total->algebra()->quiver().find_vertex(v);
    if (!i) throw Error(ErrorCode::UnknownVertex, path + ": no vertex '" + v + "' in " + u.total->algebra()->name());
    a_vertices.push_back(*i);
  }
  Recollement r = Recollement::build(u.total->algebra(), a_vertices, u.a->algebra(), u.c->algebra());
  Module t1 = sum_by_names(*u.a, setup.t1);
  Module t3 = sum_by_names(*u.c, setup.t3);
  return LoadedExample{std::move(setup), std::move(u), std::move(r), std::move(t1), std::move(t3)};
}

std::string example_path(const std::string& id) { return "example5/example" + id + ".txt"; }

GlueOutcome run_glue(const LoadedExample& ex, const Settings& settings) {
  const ExampleSetup& s = ex.setup;
  const Recollement& r = ex.recollement;
  const Universe& uni = *ex.universes.total;
  const auto& q = r.total()->quiver();
  const bool tilting = s.kind == GlueKind::Tilting;
  const char* word = tilting ? "tilting" : "cotilting";
  GlueOutcome out;
  std::ostringstream rep;

  rep << "example " << s.id << ": glue " << word << "\n";
  rep << "algebra " << r.total()->name() << " over F_" << r.total()->field().modulus() << ", dimension "
      << r.total()->dimension() << ", universe of " << uni.size() << " indecomposables\n";
  rep << "recollement A = {";
  for (std::size_t i = 0; i < r.a_vertices().size(); ++i) rep << (i ? ", " : "") << q.vertex_name(r.a_vertices()[i]);
  rep << "}, C = {";
  for (std::size_t i = 0; i < r.c_vertices().size(); ++i) rep << (i ? ", " : "") << q.vertex_name(r.c_vertices()[i]);
  rep << "}\n";
  rep << "  i^* exact: " << certificate(r.exactness().i_upper_star) << "\n";
  rep << "  i^! exact: " << certificate(r.exactness().i_shriek) << "\n";
  rep << "  j_! exact: " << certificate(r.exactness().j_lower_shriek) << "\n";
  rep << "  j_* exact: " << certificate(r.exactness().j_star) << "\n";
  rep << "T1 = " << plus_join(s.t1) << " over " << r.a_algebra()->name() << ", " << s.n1 << "-" << word << "\n";
  rep << "T3 = " << plus_join(s.t3) << " over " << r.c_algebra()->name() << ", " << s.n3 << "-" << word << "\n";

  auto pair_lines = [&](const GluedPair& g) {
    rep << "U1 = " << g.pair_a.universe->describe(g.pair_a.u) << ", V1 = " << g.pair_a.universe->describe(g.pair_a.v)
        << "\n";
    rep << "U3 = " << g.pair_c.universe->describe(g.pair_c.u) << ", V3 = " << g.pair_c.universe->describe(g.pair_c.v)
        << "\n";
    rep << "U2 = " << uni.describe(g.u2()) << "\n";
    rep << "V2 = " << uni.describe(g.v2()) << "\n";
    rep << "hereditary: " << yes_no(g.pair.hereditary) << "\n";
  };

  std::vector<std::size_t> members;
  if (tilting) {
    GluedTilting g = glue_tilting(r, ex.t1, s.n1, ex.t3, s.n3, ex.universes, settings);
    pair_lines(g.glued);
    bool ks_ok = true;
    for (const auto& k : g.ks) {
      const auto t3_name = ex.universes.c->identify(k.t3, settings.seed);
      rep << "K(" << (t3_name ? ex.universes.c->member_name(*t3_name) : std::string("?")) << ") = "
          << uni.describe(k.k_summands) << ", pushout rows exact: " << yes_no(k.column_matches && k.row_matches)
          << ", in U2 cap V2: " << yes_no(k.in_t2) << "\n";
      ks_ok = ks_ok && k.column_matches && k.row_matches && k.in_t2;
    }
    rep << "T2 = i_*T1 + K = " << uni.describe(g.t2_members) << "\n";
    rep << "U2 cap V2 = " << uni.describe(g.glued.t2) << ", agrees: " << yes_no(g.constructive_matches) << "\n";
    rep << "pd T2 = " << g.n2 << " <= max{n1, n3} = " << g.bound << ": " << yes_no(g.n2 <= g.bound) << "\n";
    rep << g.n2 << "-tilting: " << yes_no(g.report.accepted);
    if (!g.report.accepted) rep << " (" << g.report.failed_axiom << ": " << g.report.detail << ")";
    rep << "\n";
    bool pd_ok = true;
    if (g.pd_u2) {
      pd_ok = *g.pd_u2 <= g.pd_u2_bound;
      rep << "pd U2 = " << *g.pd_u2 << " <= max{n1 + 1, n3} = " << g.pd_u2_bound << ": " << yes_no(pd_ok) << "\n";
    } else {
      rep << "pd U2 bound: skipped (gl.dim of the A-side not finite below the cap)\n";
    }
    if (g.split_check)
      rep << "i^* exact, so T2 = i_*T1 + j_!T3: " << yes_no(*g.split_check) << "\n";
    else
      rep << "i_*T1 + j_!T3 comparison: skipped (i^* not exact)\n";
    out.certified = g.report.accepted && g.n2 <= g.bound && g.constructive_matches && ks_ok && pd_ok &&
                    g.split_check.value_or(true) && g.indecomposables_check.value_or(true);
    members = g.t2_members;
    out.n2 = g.n2;
    out.tilting = std::move(g);
  } else {
    GluedCotilting g = glue_cotilting(r, ex.t1, s.n1, ex.t3, s.n3, ex.universes, settings);
    pair_lines(g.glued);
    rep << "T2 = U2 cap V2 = " << uni.describe(g.t2_members) << "\n";
    const bool n_ok = g.n2 <= g.id_v2_bound;
    rep << "id T2 = " << g.n2 << " <= max{n1 + 1, n3} = " << g.id_v2_bound << ": " << yes_no(n_ok) << "\n";
    rep << g.n2 << "-cotilting: " << yes_no(g.report.accepted);
    if (!g.report.accepted) rep << " (" << g.report.failed_axiom << ": " << g.report.detail << ")";
    rep << "\n";
    const bool id_ok = g.id_v2 && *g.id_v2 <= g.id_v2_bound;
    rep << "id V2 = " << dimension_text(g.id_v2) << " <= " << g.id_v2_bound << ": " << yes_no(id_ok) << "\n";
    if (g.dual_members)
      rep << "dual route (tilting glue on the opposite recollement) = " << uni.describe(*g.dual_members)
          << ", agrees: " << yes_no(*g.dual_members == g.t2_members) << "\n";
    else
      rep << "dual route failed: " << g.dual_error << "\n";
    out.certified = g.report.accepted && n_ok && id_ok;
    members = g.t2_members;
    out.n2 = g.n2;
    out.cotilting = std::move(g);
  }
  out.members = names_of(uni, members);
  out.summary = "T2 = " + uni.describe(members) + "\nn2 = " + std::to_string(out.n2) + "\n";
  rep << "certified: " << yes_no(out.certified) << "\n";
  out.report = rep.str();
  return out;
}

Reproduction reproduce(Workspace& ws, const std::string& path, const Settings& settings) {
  Reproduction rp;
  std::ostringstream rep;
  std::vector<std::string> expect;
  std::optional<std::size_t> expect_n;
  try {
    const LoadedExample ex = load_example(ws, path);
    expect = ex.setup.expect;
    expect_n = ex.setup.expect_n;
    for (const auto& e : expect)
      if (!ex.universes.total->find_name(e)) rp.diff.push_back("- " + e + " (not in the universe)");
    if (rp.diff.empty()) {
      rp.outcome = run_glue(ex, settings);
      rep << rp.outcome.report;
      auto got = rp.outcome.members;
      auto want = expect;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      std::vector<std::string> missing, extra;
      std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
      std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
      for (const auto& m : missing) rp.diff.push_back("- " + m);
      for (const auto& m : extra) rp.diff.push_back("+ " + m);
      if (expect_n && *expect_n != rp.outcome.n2)
        rp.diff.push_back("n2 = " + std::to_string(rp.outcome.n2) + ", expected " + std::to_string(*expect_n));
      if (!rp.outcome.certified) rp.diff.push_back("the glued module failed its certificates");
    }
  } catch (const Error& e) {
    rp.error = e.code();
    rep << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    if (rp.diff.empty()) rp.diff.push_back("no glued module was produced");
  }
  rp.match = !rp.error && rp.diff.empty();
  if (!expect.empty()) {
    rep << "expected = {";
    for (std::size_t i = 0; i < expect.size(); ++i) rep << (i ? ", " : "") << expect[i];
    rep << "}";
    if (expect_n) rep << ", n2 = " << *expect_n;
    rep << "\n";
  }
  rep << "result: " << (rp.match ? "match" : "MISMATCH") << "\n";
  for (const auto& d : rp.diff) rep << "  " << d << "\n";
  rp.report = rep.str();
  return rp;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::Io:
    case ErrorCode::UnknownName:
    case ErrorCode::UnknownVertex:
    case ErrorCode::NotPrime:
    case ErrorCode::MalformedRelation:
    case ErrorCode::NotFiniteDimensional:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::InvalidModule:
    case ErrorCode::InvalidMorphism:
    case ErrorCode::AlgebraMismatch:
      return 3;
    case ErrorCode::PreconditionFailed:
    case ErrorCode::NotTilting:
    case ErrorCode::ExactnessMissing:
    case ErrorCode::NotTriangular:
    case ErrorCode::FieldTooSmall:
      return 4;
    default:
      return 2;
  }
}

}  // namespace tiltglue
