#include "gralg/taskrun.hpp"

#include <fstream>

#include "gralg/day_tensor.hpp"
#include <functional>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace gralg {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct Loc {
  std::string path;
  int line = 0;
  std::string at() const { return path + ":" + std::to_string(line); }
};

[[noreturn]] void fail(const Loc& loc, const std::string& msg) {
  throw ParseError(loc.at() + ": " + msg);
}

Rat parse_rat(const Loc& loc, const std::string& s) {
  try {
    Rat q(trim(s));
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    fail(loc, "bad rational '" + s + "'");
  }
}

Int parse_int(const Loc& loc, const std::string& s) {
  try {
    return Int(trim(s));
  } catch (const std::exception&) {
    fail(loc, "bad integer '" + s + "'");
  }
}

long parse_long(const Loc& loc, const std::string& s) {
  Int v = parse_int(loc, s);
  if (!v.fits_slong_p()) fail(loc, "integer out of range '" + s + "'");
  return v.get_si();
}

Degree parse_degree(const Loc& loc, std::string s, int dim) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  Degree d;
  for (const std::string& part : split(s, ',')) d.push_back(parse_rat(loc, part));
  if (static_cast<int>(d.size()) != dim)
    fail(loc, "degree '" + s + "' has " + std::to_string(d.size()) + " entries, expected " +
                  std::to_string(dim));
  return d;
}

WeightWindow parse_window(const Loc& loc, const std::string& s) {
  size_t p = s.find("..");
  if (p == std::string::npos) fail(loc, "window must be LO..HI, got '" + s + "'");
  WeightWindow w{parse_rat(loc, s.substr(0, p)), parse_rat(loc, s.substr(p + 2))};
  if (w.hi < w.lo) fail(loc, "empty window '" + s + "'");
  return w;
}

// [[a,b],[c,d]]; entries parsed by the supplied reader.
template <typename T>
std::vector<std::vector<T>> parse_rows(const Loc& loc, const std::string& s,
                                       const std::function<T(const std::string&)>& read) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') fail(loc, "expected [[...],[...]]");
  t = t.substr(1, t.size() - 2);
  std::vector<std::vector<T>> rows;
  size_t i = 0;
  while (i < t.size()) {
    if (t[i] == ',') {
      ++i;
      continue;
    }
    if (t[i] != '[') fail(loc, "expected '[' in matrix");
    size_t j = t.find(']', i);
    if (j == std::string::npos) fail(loc, "unterminated row in matrix");
    std::string row = t.substr(i + 1, j - i - 1);
    std::vector<T> r;
    if (!trim(row).empty())
      for (const std::string& e : split(row, ',')) r.push_back(read(e));
    rows.push_back(std::move(r));
    i = j + 1;
  }
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) fail(loc, "ragged matrix rows");
  return rows;
}

IntMat parse_matrix(const Loc& loc, const std::string& s) {
  auto rows = parse_rows<Int>(loc, s, [&](const std::string& e) { return parse_int(loc, e); });
  if (rows.empty()) return IntMat(0, 0);
  IntMat a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return a;
}

FpAbGroup parse_group(const Loc& loc, const std::string& s) {
  std::string t = trim(s);
  if (t == "0") return FpAbGroup::zero();
  long rank = 0;
  std::vector<Int> torsion;
  for (std::string part : split(t, '+')) {
    part = trim(part);
    if (part == "Z") {
      ++rank;
    } else if (part.rfind("Z^", 0) == 0) {
      rank += parse_long(loc, part.substr(2));
    } else if (part.rfind("Z/", 0) == 0) {
      Int d = parse_int(loc, part.substr(2));
      if (d < 2) fail(loc, "torsion order must be >= 2 in '" + part + "'");
      torsion.push_back(d);
    } else {
      fail(loc, "bad group summand '" + part + "' (use Z, Z^k, Z/d)");
    }
  }
  return FpAbGroup::from_invariants(rank, torsion);
}

Poly parse_poly_at(const Loc& loc, const std::string& s, const std::vector<std::string>& names) {
  try {
    return parse_poly(s, names);
  } catch (const ParseError& e) {
    fail(loc, e.what());
  }
}

std::vector<Poly> parse_polys(const Loc& loc, const std::string& s,
                              const std::vector<std::string>& names) {
  std::vector<Poly> out;
  for (const std::string& part : split(s, ','))
    out.push_back(parse_poly_at(loc, part, names));
  return out;
}

struct FileCtx {
  std::optional<GradedRing> ring;
  std::map<std::string, GradedModule> modules;
};

const GradedRing& need_ring(const Loc& loc, const FileCtx& ctx) {
  if (!ctx.ring) fail(loc, "this task needs a ring block");
  return *ctx.ring;
}

struct Params {
  Loc loc;
  std::map<std::string, std::string> kv;
  mutable std::set<std::string> used;

  bool has(const std::string& k) const {
    bool h = kv.count(k) > 0;
    if (h) used.insert(k);
    return h;
  }
  const std::string& get(const std::string& k) const {
    auto it = kv.find(k);
    if (it == kv.end()) fail(loc, "missing parameter '" + k + "'");
    used.insert(k);
    return it->second;
  }
  std::string get_or(const std::string& k, const std::string& dflt) const {
    return has(k) ? get(k) : dflt;
  }
  int int_or(const std::string& k, int dflt) const {
    return has(k) ? static_cast<int>(parse_long(loc, get(k))) : dflt;
  }
  void check_all_used() const {
    for (const auto& [k, v] : kv)
      if (!used.count(k)) fail(loc, "unknown parameter '" + k + "'");
  }
  const GradedModule& module_of(const FileCtx& ctx, const std::string& key) const {
    const std::string& name = get(key);
    auto it = ctx.modules.find(name);
    if (it == ctx.modules.end()) fail(loc, "unknown module '" + name + "'");
    return it->second;
  }
};

struct Result {
  json j = json::object();
  std::vector<std::string> lines;
  bool ok = true;
  bool undetermined = false;

  void kv(const std::string& k, const std::string& v) {
    j[k] = v;
    lines.push_back("  " + k + ": " + v);
  }
  void kv(const std::string& k, long v) {
    j[k] = v;
    lines.push_back("  " + k + ": " + std::to_string(v));
  }
  void kv(const std::string& k, bool v) {
    j[k] = v;
    lines.push_back("  " + k + ": " + (v ? "true" : "false"));
  }
  void table(const std::string& k, const std::vector<std::pair<std::string, std::string>>& rows) {
    json arr = json::array();
    for (const auto& [a, b] : rows) {
      arr.push_back(json::array({a, b}));
      lines.push_back("  " + k + "[" + a + "] = " + b);
    }
    j[k] = std::move(arr);
  }
  void matrix(const std::string& k, const IntMat& a) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index jx = 0; jx < a.cols(); ++jx) row.push_back(a(i, jx).get_str());
      rows.push_back(std::move(row));
    }
    j[k] = std::move(rows);
    std::istringstream is(to_string(a));
    std::string line;
    lines.push_back("  " + k + ":");
    while (std::getline(is, line)) lines.push_back("    " + line);
  }
};

std::string gstr(const FpAbGroup& g) { return g.invariant_string(); }

void expect_verdict(const Params& p, Result& r, const std::string& actual) {
  if (!p.has("expect")) return;
  std::string want = p.get("expect");
  r.kv("expected", want);
  if (want != actual) r.ok = false;
}

WeightWindow task_window(const Params& p, const RunOptions& opts) {
  return p.has("window") ? parse_window(p.loc, p.get("window")) : opts.window;
}

// ---------------------------------------------------------------------------
// handlers

void op_snf(FileCtx&, const Params& p, const RunOptions&, Result& r) {
  IntMat a = parse_matrix(p.loc, p.get("matrix"));
  Smith s = smith_normal_form(a);
  r.kv("rank", static_cast<long>(s.rank));
  std::vector<std::pair<std::string, std::string>> d;
  for (Eigen::Index k = 0; k < s.D.rows() && k < s.D.cols(); ++k)
    d.emplace_back(std::to_string(k), s.D(k, k).get_str());
  r.table("diagonal", d);
  r.matrix("U", s.U);
  r.matrix("D", s.D);
  r.matrix("V", s.V);
  auto is_identity = [](const IntMat& m) {
    IntMat id = IntMat::Identity(m.rows(), m.cols());
    return m.rows() == m.cols() && is_zero(IntMat(m - id));
  };
  bool witness = is_zero(IntMat(s.U * a * s.V - s.D)) && is_identity(IntMat(s.U * s.Uinv)) &&
                 is_identity(IntMat(s.V * s.Vinv));
  r.kv("witness", witness);
  r.ok = witness;
}

void op_cokernel(FileCtx&, const Params& p, const RunOptions&, Result& r) {
  IntMat a = parse_matrix(p.loc, p.get("matrix"));
  FpAbGroup g = FpAbGroup::from_presentation(a.rows(), a);
  r.kv("group", gstr(g));
}

void op_homology(FileCtx&, const Params& p, const RunOptions&, Result& r) {
  IntMat dout = parse_matrix(p.loc, p.get("d_out"));
  IntMat din = parse_matrix(p.loc, p.get("d_in"));
  if (din.rows() != dout.cols()) fail(p.loc, "d_in rows must match d_out cols");
  AbMap fin = AbMap::unchecked(FpAbGroup::free_group(din.cols()),
                               FpAbGroup::free_group(din.rows()), din);
  AbMap fout = AbMap::unchecked(FpAbGroup::free_group(dout.cols()),
                                FpAbGroup::free_group(dout.rows()), dout);
  HomologyData h = ab_homology(fin, fout);
  r.kv("homology", gstr(h.H));
}

void op_hom_group(FileCtx&, const Params& p, const RunOptions&, Result& r) {
  FpAbGroup a = parse_group(p.loc, p.get("a"));
  FpAbGroup b = parse_group(p.loc, p.get("b"));
  HomGroupData h = hom_group(a, b);
  r.kv("group", gstr(h.group));
  r.kv("order", h.group.order().get_str());
  r.kv("basis_maps", static_cast<long>(h.basis_maps.size()));
}

void op_validate_signature(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedRing& ring = need_ring(p.loc, ctx);
  PointednessCertificate cert = validate(ring.sig);
  std::vector<std::pair<std::string, std::string>> rows;
  for (size_t v = 0; v < cert.gen_weights.size(); ++v)
    rows.emplace_back(ring.sig.var_names[v], cert.gen_weights[v].get_str());
  r.table("generator_weights", rows);
  r.kv("pointed", true);
}

void op_monomials(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedRing& ring = need_ring(p.loc, ctx);
  Degree g = parse_degree(p.loc, p.get("degree"), ring.sig.dim);
  std::vector<Exp> ms = monomials_of_degree(ring.sig, g);
  std::vector<std::pair<std::string, std::string>> rows;
  for (size_t i = 0; i < ms.size(); ++i)
    rows.emplace_back(std::to_string(i), Poly::monomial(ring.sig.nvars(), ms[i], 1).str(ring.names()));
  r.table("monomials", rows);
  r.kv("count", static_cast<long>(ms.size()));
}

void op_ring_piece(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedRing& ring = need_ring(p.loc, ctx);
  Degree g = parse_degree(p.loc, p.get("degree"), ring.sig.dim);
  const RingPiece& piece = ring.piece(g);
  r.kv("group", gstr(piece.group));
  std::vector<std::pair<std::string, std::string>> rows;
  for (size_t i = 0; i < piece.basis.size(); ++i)
    rows.emplace_back(std::to_string(i),
                      Poly::monomial(ring.sig.nvars(), piece.basis[i], 1).str(ring.names()));
  r.table("basis", rows);
}

void op_module_piece(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  Degree g = parse_degree(p.loc, p.get("degree"), m.ring.sig.dim);
  const ModulePiece& piece = m.piece(g);
  r.kv("group", gstr(piece.group));
  r.kv("basis_size", static_cast<long>(piece.basis.size()));
}

void op_shift(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  Degree s = parse_degree(p.loc, p.get("degree"), m.ring.sig.dim);
  GradedModule sh = m.shifted(s);
  WeightWindow w = task_window(p, opts);
  std::vector<std::pair<std::string, std::string>> rows;
  bool all = true;
  for (const Degree& g : sh.window_degrees(w)) {
    const FpAbGroup& a = sh.piece(g).group;
    const FpAbGroup& b = m.piece(deg_add(g, s)).group;
    bool same = a.same_invariants(b);
    all = all && same;
    rows.emplace_back(deg_str(g), gstr(a) + (same ? "" : " MISMATCH vs " + gstr(b)));
  }
  r.table("pieces", rows);
  r.kv("shift_identity", all);
  r.ok = all;
}

void op_decompose(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedRing& ring = need_ring(p.loc, ctx);
  Poly f = parse_poly_at(p.loc, p.get("poly"), ring.names());
  auto parts = ring.decompose(f);
  std::vector<std::pair<std::string, std::string>> rows;
  Poly sum = Poly::zero(ring.sig.nvars());
  bool homog = true;
  for (const auto& [d, comp] : parts) {
    rows.emplace_back(deg_str(d), comp.str(ring.names()));
    sum = sum + comp;
    auto hd = ring.homogeneous_degree(comp);
    homog = homog && hd && *hd == d;
  }
  r.table("components", rows);
  r.ok = homog && sum == f;
  r.kv("sum_check", r.ok);
}

void op_day_tensor(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedModule& m = p.module_of(ctx, "left");
  const GradedModule& n = p.module_of(ctx, "right");
  Degree g = parse_degree(p.loc, p.get("degree"), m.ring.sig.dim);
  DayTensorPiece day = day_tensor_piece(m, n, g);
  FpAbGroup plain = tensor_module(m, n).piece(g).group;
  r.kv("day_piece", gstr(day.group));
  r.kv("presentation_piece", gstr(plain));
  r.kv("blocks", static_cast<long>(day.blocks.size()));
  r.ok = day.group.same_invariants(plain);
  r.kv("agree", r.ok);
}

void op_retract(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  const GradedModule& n = p.has("other") ? p.module_of(ctx, "other") : m;
  WeightWindow w = task_window(p, opts);
  GradedMap gm = GradedMap::identity(m);
  if (p.has("map")) {
    auto rows = parse_rows<Poly>(p.loc, p.get("map"), [&](const std::string& e) {
      return parse_poly_at(p.loc, e, m.ring.names());
    });
    gm = GradedMap::make(m, n, deg_zero(m.ring.sig.dim), rows);
  } else if (p.has("other")) {
    fail(p.loc, "a map= matrix is required when other= differs from module=");
  }
  WindowedCarrier src = windowed_carrier(m, w);
  WindowedCarrier tgt = windowed_carrier(n, w);
  DegreewiseFamily fam;
  fam.degrees = src.degrees;
  for (const Degree& g : src.degrees) fam.comps.push_back(gm.realize(g));
  IntMat total = include_family(src, tgt, fam);
  DegreewiseFamily back = retract_map(src, tgt, total);
  r.ok = families_agree(tgt, fam, back);
  r.kv("roundtrip_identity", r.ok);
  r.kv("degrees", static_cast<long>(src.degrees.size()));
}

void op_hom_fiber(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "left");
  const GradedModule& n = p.module_of(ctx, "right");
  HomFiberReport rep = graded_hom_fiber_check(m, n, task_window(p, opts));
  r.kv("family_group", gstr(rep.family_group));
  r.kv("rmap_group", gstr(rep.rmap_group));
  r.ok = rep.families_match;
  r.kv("families_match", r.ok);
}

void op_koszul(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedRing& ring = need_ring(p.loc, ctx);
  std::vector<Poly> fs = parse_polys(p.loc, p.get("seq"), ring.names());
  long n = p.int_or("n", 1);
  KoszulData k = koszul_complex(ring, fs, n);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [i, term] : k.complex.terms)
    rows.emplace_back(std::to_string(i), std::to_string(term.ngens()) + " generators");
  r.table("terms", rows);
  r.kv("differential_squares_to_zero", true);
}

void pi_table(Result& r, const GradedComplex& c, const WeightWindow& w) {
  std::vector<Degree> degs = c.window_degrees(w);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [i, term] : c.terms)
    for (const Degree& g : degs)
      rows.emplace_back("pi_" + std::to_string(i) + "@" + deg_str(g), gstr(c.pi(i, g).H));
  r.table("homotopy", rows);
}

void op_derived_quotient(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  std::vector<Poly> fs = parse_polys(p.loc, p.get("seq"), m.ring.names());
  TensorComplexData q = derived_quotient(m, fs, p.int_or("n", 1));
  pi_table(r, q.complex, task_window(p, opts));
}

void op_homotopy(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  GradedComplex c = GradedComplex::from_module(m);
  if (p.has("seq"))
    c = derived_quotient(m, parse_polys(p.loc, p.get("seq"), m.ring.names()), p.int_or("n", 1))
            .complex;
  int i = p.int_or("index", 0);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const Degree& g : c.window_degrees(task_window(p, opts)))
    rows.emplace_back(deg_str(g), gstr(c.pi(i, g).H));
  r.table("pi", rows);
}

void op_verify_ses(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  Poly f = parse_poly_at(p.loc, p.get("f"), m.ring.names());
  int i = p.int_or("index", 0);
  GradedComplex x = GradedComplex::from_module(m);
  std::vector<std::pair<std::string, std::string>> rows;
  bool all = true;
  for (const Degree& g : m.window_degrees(task_window(p, opts))) {
    SesReport s = verify_quotient_ses(x, f, i, g);
    all = all && s.passed();
    rows.emplace_back(deg_str(g), gstr(s.left) + " -> " + gstr(s.middle) + " -> " +
                                      gstr(s.right) + (s.passed() ? " exact" : " NOT EXACT"));
  }
  r.table("sequence", rows);
  r.ok = all;
  r.kv("exact", all);
}

void op_tensor_perfect(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  std::vector<Poly> fs = parse_polys(p.loc, p.get("seq"), m.ring.names());
  KoszulData k = koszul_complex(*ctx.ring, fs, p.int_or("n", 1));
  TensorComplexData t = tensor_with_perfect(m, k.complex);
  pi_table(r, t.complex, task_window(p, opts));
}

std::string verdict_str(const TowerVerdict& v) {
  std::string s = lim_status_str(v.status);
  if (v.status == LimStatus::Stabilized)
    s += "(" + gstr(*v.value) + ", stage " + std::to_string(v.stage) + ")";
  return s;
}

void op_tower(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  std::vector<Poly> fs = parse_polys(p.loc, p.get("ideal"), m.ring.names());
  WeightWindow w = task_window(p, opts);
  CompletionApproximation c = gradedwise_completion(m, fs, p.int_or("precision", opts.precision), w);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string worst = "Stabilized";
  for (const auto& [g, v] : c.flags) {
    rows.emplace_back(deg_str(g), verdict_str(v) + (v.lim1_zero ? ", lim1 = 0" : ""));
    if (v.status == LimStatus::Undetermined) {
      r.undetermined = true;
      worst = "Undetermined";
    } else if (v.status == LimStatus::SurjectiveTail && worst == "Stabilized") {
      worst = "SurjectiveTail";
    }
  }
  r.table("verdicts", rows);
  expect_verdict(p, r, worst);
}

void op_gradedwise_completion(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  std::vector<Poly> fs = parse_polys(p.loc, p.get("ideal"), m.ring.names());
  WeightWindow w = task_window(p, opts);
  CompletionApproximation c = gradedwise_completion(m, fs, p.int_or("precision", opts.precision), w);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string worst = "Stabilized";
  for (const auto& [g, v] : c.flags) {
    std::string stage_val = gstr(c.stage_modules.back().piece(g).group);
    rows.emplace_back(deg_str(g), "stage value " + stage_val + ", " + verdict_str(v));
    if (v.status == LimStatus::Undetermined) {
      r.undetermined = true;
      worst = "Undetermined";
    } else if (v.status == LimStatus::SurjectiveTail && worst == "Stabilized") {
      worst = "SurjectiveTail";
    }
  }
  r.table("degrees", rows);
  expect_verdict(p, r, worst);
}

void op_derived_completion(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  std::vector<Poly> fs = parse_polys(p.loc, p.get("ideal"), m.ring.names());
  WeightWindow w = task_window(p, opts);
  CompletionApproximation c =
      derived_gradedwise_completion(m, fs, p.int_or("precision", opts.precision), w);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string worst = "Stabilized";
  for (const auto& [i, per_deg] : c.pi_flags)
    for (const auto& [g, v] : per_deg) {
      rows.emplace_back("pi_" + std::to_string(i) + "@" + deg_str(g), verdict_str(v));
      if (v.status == LimStatus::Undetermined) {
        r.undetermined = true;
        worst = "Undetermined";
      } else if (v.status == LimStatus::SurjectiveTail && worst == "Stabilized") {
        worst = "SurjectiveTail";
      }
    }
  r.table("verdicts", rows);
  expect_verdict(p, r, worst);
}

void op_milnor(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  std::vector<Poly> fs = parse_polys(p.loc, p.get("seq"), m.ring.names());
  ComplexTower t =
      koszul_tower(GradedComplex::from_module(m), fs, p.int_or("precision", opts.precision));
  int i = p.int_or("index", 0);
  std::vector<MilnorEntry> entries = milnor_check(t, i, m.window_degrees(task_window(p, opts)));
  std::vector<std::pair<std::string, std::string>> rows;
  bool all = true;
  for (const MilnorEntry& e : entries) {
    all = all && e.match;
    rows.emplace_back(deg_str(e.degree),
                      "limit " + gstr(e.limit) + ", tower " + verdict_str(e.v_i) +
                          (e.match ? "" : " MISMATCH"));
  }
  r.table("entries", rows);
  r.ok = all;
  r.kv("match", all);
}

void op_telescope(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  Poly f = parse_poly_at(p.loc, p.get("f"), m.ring.names());
  Degree g = parse_degree(p.loc, p.get("degree"), m.ring.sig.dim);
  TelescopeResult t = telescope_vanishes(m, f, g, p.int_or("depth", opts.depth));
  std::string status = telescope_status_str(t.status);
  r.kv("status", status);
  r.kv("certificate", t.certificate);
  if (t.witness) r.kv("witness", gstr(*t.witness));
  if (t.param >= 0) r.kv("stage", static_cast<long>(t.param));
  r.undetermined = t.status == TelescopeStatus::Undetermined;
  if (p.has("expect")) {
    std::string want = p.get("expect");
    r.kv("expected", want);
    std::string got = status == "Vanishes" ? "vanishes"
                      : status == "NonVanishing" ? "nonvanishing" : "undetermined";
    if (want != got) r.ok = false;
  }
}

void op_is_complete(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  std::vector<Poly> fs = parse_polys(p.loc, p.get("ideal"), m.ring.names());
  CompletenessReport rep =
      is_derived_gradedwise_complete(m, fs, task_window(p, opts), p.int_or("depth", opts.depth));
  std::string verdict = cert_verdict_str(rep.verdict);
  r.kv("verdict", verdict);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const CompletenessEntry& e : rep.entries)
    if (e.result.status != TelescopeStatus::Vanishes)
      rows.emplace_back("f" + std::to_string(e.f_index) + " pi_" + std::to_string(e.pi_index) +
                            deg_str(e.degree),
                        telescope_status_str(e.result.status));
  r.table("non_vanishing", rows);
  r.undetermined = rep.verdict == CertVerdict::Undetermined;
  if (p.has("expect")) {
    std::string want = p.get("expect");
    r.kv("expected", want);
    std::string got = rep.verdict == CertVerdict::Yes ? "yes"
                      : rep.verdict == CertVerdict::No ? "no" : "undetermined";
    if (want != got) r.ok = false;
  } else if (rep.verdict == CertVerdict::No) {
    r.ok = false;
  }
}

void op_pro_iso(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  Poly f = parse_poly_at(p.loc, p.get("f"), m.ring.names());
  ProIsoReport rep =
      pro_isomorphism_check(m, f, p.int_or("depth", opts.depth), task_window(p, opts));
  std::vector<std::pair<std::string, std::string>> rows;
  bool all_found = true;
  for (const auto& [g, c] : rep.c_of_degree) {
    rows.emplace_back(deg_str(g), c < 0 ? "not found within depth" : std::to_string(c));
    all_found = all_found && c >= 0;
  }
  r.table("torsion_bound", rows);
  r.kv("global_c", static_cast<long>(rep.global_c));
  r.kv("certified", rep.certified);
  if (!all_found) {
    r.undetermined = true;
  } else {
    r.ok = rep.certified;
  }
  if (p.has("expect_c")) {
    long want = parse_long(p.loc, p.get("expect_c"));
    r.kv("expected_c", want);
    if (want != rep.global_c) r.ok = false;
  }
}

void op_nakayama(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  std::vector<Poly> fs = parse_polys(p.loc, p.get("ideal"), m.ring.names());
  NakayamaReport rep = derived_nakayama_check(m, fs, p.int_or("index", 1), task_window(p, opts),
                                              p.int_or("depth", opts.depth));
  r.kv("completeness", cert_verdict_str(rep.completeness.verdict));
  r.kv("conn_index", static_cast<long>(rep.conn_index));
  r.kv("quotient_connective", rep.quotient_connective);
  r.kv("asserted", rep.asserted);
  r.kv("module_connective", rep.module_connective);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const Degree& g : rep.counterexamples) rows.emplace_back(deg_str(g), "counterexample");
  r.table("counterexamples", rows);
  r.ok = rep.passed();
  r.kv("passed", r.ok);
}

void op_completed_tensor(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  std::vector<Poly> seq = parse_polys(p.loc, p.get("seq"), m.ring.names());
  std::vector<Poly> fs = parse_polys(p.loc, p.get("ideal"), m.ring.names());
  KoszulData k = koszul_complex(m.ring, seq, p.int_or("n", 1));
  WeightWindow w = task_window(p, opts);
  CompletionApproximation c =
      completed_tensor(m, k.complex, fs, p.int_or("precision", opts.precision), w);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [i, per_deg] : c.pi_flags)
    for (const auto& [g, v] : per_deg) {
      rows.emplace_back("pi_" + std::to_string(i) + "@" + deg_str(g), verdict_str(v));
      if (v.status == LimStatus::Undetermined) r.undetermined = true;
    }
  r.table("verdicts", rows);
}

GroupRingElement parse_gre(const Loc& loc, const std::string& s, const GradedRing& ring) {
  GroupRingElement x = GroupRingElement::zero(1, ring.sig.nvars());
  std::string t = trim(s);
  if (t == "0") return x;
  for (const std::string& part : split(t, ';')) {
    size_t at = part.rfind('@');
    if (at == std::string::npos) fail(loc, "group-ring term needs poly@degree: '" + part + "'");
    Poly c = parse_poly_at(loc, part.substr(0, at), ring.names());
    Degree g = parse_degree(loc, part.substr(at + 1), ring.sig.dim);
    x.add_term(g, {c});
  }
  return x;
}

void op_comultiply(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedRing& ring = need_ring(p.loc, ctx);
  GroupRingElement x = parse_gre(p.loc, p.get("elem"), ring);
  TensorExpansion e = comultiply(x);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [key, c] : e.terms)
    rows.emplace_back("t^" + deg_str(key.first) + " x t^" + deg_str(key.second),
                      c[0].str(ring.names()));
  r.table("expansion", rows);
}

void op_counit(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedRing& ring = need_ring(p.loc, ctx);
  GroupRingElement x = parse_gre(p.loc, p.get("elem"), ring);
  r.kv("value", counit_ring(x).str(ring.names()));
}

void op_antipode(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedRing& ring = need_ring(p.loc, ctx);
  GroupRingElement x = parse_gre(p.loc, p.get("elem"), ring);
  GroupRingElement a = antipode(x);
  r.kv("value", a.str(ring.sig));
  GroupRingElement back = antipode(a);
  bool invol = back.terms.size() == x.terms.size();
  if (invol)
    for (const auto& [g, c] : x.terms) {
      auto it = back.terms.find(g);
      if (it == back.terms.end() || !(it->second[0] == c[0])) invol = false;
    }
  r.kv("involution", invol);
  r.ok = invol;
}

void op_coaction_ring(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedRing& ring = need_ring(p.loc, ctx);
  CoactionData c = coaction_from_grading(ring);
  std::vector<std::pair<std::string, std::string>> rows;
  for (int v = 0; v < ring.sig.nvars(); ++v)
    rows.emplace_back(ring.sig.var_names[static_cast<size_t>(v)],
                      c.images[static_cast<size_t>(v)].str(ring.sig));
  r.table("images", rows);
  CoactionReport rep = verify_coaction_axioms(c, {});
  r.kv("checks", static_cast<long>(rep.checks));
  r.ok = rep.passed();
  r.kv("axioms", r.ok);
}

void op_grading_from_coaction(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedRing& ring = need_ring(p.loc, ctx);
  CoactionData c;
  bool defaulted = !p.has("images");
  if (defaulted) {
    c = coaction_from_grading(ring);
  } else {
    c.ring = ring;
    std::vector<std::string> parts = split(p.get("images"), ';');
    if (static_cast<int>(parts.size()) != ring.sig.nvars())
      fail(p.loc, "need one image per variable");
    for (const std::string& s : parts) {
      size_t at = s.rfind('@');
      if (at == std::string::npos) fail(p.loc, "image needs poly@degree: '" + s + "'");
      c.images.push_back(GroupRingElement::ring_term(
          parse_poly_at(p.loc, s.substr(0, at), ring.names()),
          parse_degree(p.loc, s.substr(at + 1), ring.sig.dim)));
    }
  }
  GradingRecovery rec = grading_from_coaction(c, task_window(p, opts));
  std::vector<std::pair<std::string, std::string>> rows;
  for (int v = 0; v < ring.sig.nvars(); ++v)
    rows.emplace_back(ring.sig.var_names[static_cast<size_t>(v)],
                      deg_str(rec.ring.sig.gen_degrees[static_cast<size_t>(v)]));
  r.table("recovered_degrees", rows);
  r.kv("checks", static_cast<long>(rec.report.checks));
  if (defaulted) {
    bool match = rec.ring.sig.gen_degrees == ring.sig.gen_degrees;
    r.kv("roundtrip_identity", match);
    r.ok = match;
  }
}

void op_verify_coaction(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  CoactionData c;
  if (p.has("module")) {
    const GradedModule& m = p.module_of(ctx, "module");
    c = comodule_coaction(m);
  } else {
    c = coaction_from_grading(need_ring(p.loc, ctx));
  }
  CoactionReport rep = verify_coaction_axioms(c, {});
  r.kv("checks", static_cast<long>(rep.checks));
  std::vector<std::pair<std::string, std::string>> rows;
  for (const AxiomFailure& f : rep.failures) rows.emplace_back(f.axiom + " on " + f.element, f.detail);
  r.table("failures", rows);
  r.ok = rep.passed();
  r.kv("axioms", r.ok);
}

void op_group_ring(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  WeightWindow w = task_window(p, opts);
  ModuleGroupRing mg = module_group_ring(m, w);
  std::vector<std::pair<std::string, std::string>> labels;
  for (const Degree& h : mg.labels) labels.emplace_back(deg_str(h), "t-exponent");
  r.table("labels", labels);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const Degree& g : mg.module.window_degrees(w))
    rows.emplace_back(deg_str(g), gstr(mg.module.piece(g).group));
  r.table("pieces", rows);
}

void op_module_coaction(FileCtx& ctx, const Params& p, const RunOptions&, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  CoactionData c = comodule_coaction(m);
  std::vector<std::pair<std::string, std::string>> rows;
  for (Eigen::Index j = 0; j < m.ngens(); ++j)
    rows.emplace_back("e" + std::to_string(j), c.images[static_cast<size_t>(j)].str(m.ring.sig));
  r.table("images", rows);
  CoactionReport rep = verify_coaction_axioms(c, {});
  r.ok = rep.passed();
  r.kv("axioms", r.ok);
}

void op_graded_part(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  Degree g = parse_degree(p.loc, p.get("degree"), m.ring.sig.dim);
  WeightWindow w = task_window(p, opts);
  GradedPartRecovery rec = graded_part_from_coaction(m, comodule_coaction(m), g, w);
  r.kv("recovered", gstr(rec.group));
  r.kv("piece", gstr(m.piece(g).group));
  bool match = rec.group.same_invariants(m.piece(g).group);
  r.kv("match", match);
  r.kv("projection_roundtrip", rec.projection_roundtrip);
  r.ok = match && rec.projection_roundtrip;
}

void op_roundtrip(FileCtx& ctx, const Params& p, const RunOptions& opts, Result& r) {
  const GradedModule& m = p.module_of(ctx, "module");
  RoundtripReport rep = roundtrip_equivalence_check(m, task_window(p, opts));
  r.kv("axioms", rep.axioms_ok);
  r.kv("action", rep.action_ok);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const RoundtripEntry& e : rep.entries)
    rows.emplace_back(deg_str(e.degree),
                      e.recovered + (e.match && e.projection_ok ? " recovered" : " MISMATCH"));
  r.table("pieces", rows);
  r.ok = rep.passed();
  r.kv("passed", r.ok);
}

using Handler = void (*)(FileCtx&, const Params&, const RunOptions&, Result&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"snf", op_snf},
      {"cokernel", op_cokernel},
      {"homology", op_homology},
      {"hom_group", op_hom_group},
      {"validate_signature", op_validate_signature},
      {"monomials", op_monomials},
      {"ring_piece", op_ring_piece},
      {"module_piece", op_module_piece},
      {"shift", op_shift},
      {"decompose", op_decompose},
      {"day_tensor", op_day_tensor},
      {"retract", op_retract},
      {"hom_fiber", op_hom_fiber},
      {"koszul", op_koszul},
      {"derived_quotient", op_derived_quotient},
      {"homotopy", op_homotopy},
      {"verify_ses", op_verify_ses},
      {"tensor_perfect", op_tensor_perfect},
      {"tower", op_tower},
      {"milnor", op_milnor},
      {"gradedwise_completion", op_gradedwise_completion},
      {"derived_completion", op_derived_completion},
      {"telescope", op_telescope},
      {"is_complete", op_is_complete},
      {"pro_iso", op_pro_iso},
      {"nakayama", op_nakayama},
      {"completed_tensor", op_completed_tensor},
      {"comultiply", op_comultiply},
      {"counit", op_counit},
      {"antipode", op_antipode},
      {"coaction_ring", op_coaction_ring},
      {"grading_from_coaction", op_grading_from_coaction},
      {"verify_coaction", op_verify_coaction},
      {"group_ring", op_group_ring},
      {"module_coaction", op_module_coaction},
      {"graded_part", op_graded_part},
      {"roundtrip", op_roundtrip},
  };
  return h;
}

struct PendingTask {
  Params params;
  std::string keyword;
};

struct ParsedFile {
  FileCtx ctx;
  std::vector<PendingTask> tasks;
};

ParsedFile parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open task file '" + path + "'");
  ParsedFile out;

  enum class Mode { Top, Ring, Module };
  Mode mode = Mode::Top;
  Loc loc{path, 0};

  // ring block accumulators
  int dim = -1;
  std::vector<Rat> weight;
  std::vector<std::string> var_names;
  std::vector<Degree> var_degs;
  std::vector<std::string> ideal_strs;
  std::vector<Loc> ideal_locs;

  // module block accumulators
  std::string mod_name;
  std::vector<Degree> mod_gens;
  std::vector<std::pair<Loc, std::string>> mod_rels;

  auto close_ring = [&]() {
    if (dim < 1) fail(loc, "ring block needs dim >= 1");
    if (static_cast<int>(weight.size()) != dim) fail(loc, "weight needs one entry per dimension");
    GradingSignature sig;
    sig.dim = dim;
    sig.weight = weight;
    sig.gen_degrees = var_degs;
    sig.var_names = var_names;
    std::vector<Poly> ideal;
    for (size_t i = 0; i < ideal_strs.size(); ++i)
      ideal.push_back(parse_poly_at(ideal_locs[i], ideal_strs[i], var_names));
    out.ctx.ring = GradedRing::make(sig, ideal);
  };

  auto close_module = [&]() {
    const GradedRing& ring = need_ring(loc, out.ctx);
    std::vector<std::vector<Poly>> cols;
    for (const auto& [rloc, text] : mod_rels) {
      std::vector<Poly> col = parse_polys(rloc, text, ring.names());
      if (col.size() != mod_gens.size())
        fail(rloc, "relation has " + std::to_string(col.size()) + " entries, expected " +
                       std::to_string(mod_gens.size()));
      cols.push_back(std::move(col));
    }
    out.ctx.modules.emplace(mod_name, GradedModule::make(ring, mod_gens, cols, mod_name));
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++loc.line;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (mode == Mode::Top) {
      std::istringstream is(line);
      std::string head;
      is >> head;
      if (head == "ring") {
        std::string brace;
        is >> brace;
        if (brace != "{") fail(loc, "expected 'ring {'");
        if (out.ctx.ring) fail(loc, "duplicate ring block");
        mode = Mode::Ring;
        dim = -1;
        weight.clear();
        var_names.clear();
        var_degs.clear();
        ideal_strs.clear();
        ideal_locs.clear();
      } else if (head == "module") {
        std::string name, brace;
        is >> name >> brace;
        if (name.empty() || brace != "{") fail(loc, "expected 'module NAME {'");
        if (out.ctx.modules.count(name)) fail(loc, "duplicate module '" + name + "'");
        mode = Mode::Module;
        mod_name = name;
        mod_gens.clear();
        mod_rels.clear();
      } else if (head == "task") {
        std::string kw;
        is >> kw;
        if (kw.empty()) fail(loc, "task needs a keyword");
        if (!handlers().count(kw)) fail(loc, "unknown task '" + kw + "'");
        PendingTask t;
        t.keyword = kw;
        t.params.loc = loc;
        std::string tok;
        while (is >> tok) {
          size_t eq = tok.find('=');
          if (eq == std::string::npos || eq == 0)
            fail(loc, "task parameter must be key=value, got '" + tok + "'");
          std::string key = tok.substr(0, eq);
          if (t.params.kv.count(key)) fail(loc, "duplicate parameter '" + key + "'");
          t.params.kv.emplace(key, tok.substr(eq + 1));
        }
        out.tasks.push_back(std::move(t));
      } else {
        fail(loc, "expected 'ring {', 'module NAME {', or 'task ...', got '" + head + "'");
      }
      continue;
    }

    if (line == "}") {
      if (mode == Mode::Ring) close_ring();
      if (mode == Mode::Module) close_module();
      mode = Mode::Top;
      continue;
    }

    std::istringstream is(line);
    std::string head;
    is >> head;
    if (mode == Mode::Ring) {
      if (head == "dim") {
        std::string v;
        is >> v;
        dim = static_cast<int>(parse_long(loc, v));
      } else if (head == "weight") {
        std::string v;
        while (is >> v) weight.push_back(parse_rat(loc, v));
      } else if (head == "var") {
        std::string name, deg;
        is >> name >> deg;
        if (name.empty() || deg.empty()) fail(loc, "expected 'var NAME DEGREE'");
        if (dim < 1) fail(loc, "dim must come before var");
        var_names.push_back(name);
        var_degs.push_back(parse_degree(loc, deg, dim));
      } else if (head == "ideal") {
        std::string rest;
        std::getline(is, rest);
        rest = trim(rest);
        if (rest.empty()) fail(loc, "ideal needs a polynomial");
        ideal_strs.push_back(rest);
        ideal_locs.push_back(loc);
      } else {
        fail(loc, "unknown ring entry '" + head + "'");
      }
    } else {  // Module
      if (head == "gen") {
        std::string deg;
        is >> deg;
        if (deg.empty()) fail(loc, "expected 'gen DEGREE'");
        mod_gens.push_back(parse_degree(loc, deg, need_ring(loc, out.ctx).sig.dim));
      } else if (head == "rel") {
        std::string rest;
        std::getline(is, rest);
        rest = trim(rest);
        if (rest.empty()) fail(loc, "rel needs entries");
        mod_rels.emplace_back(loc, rest);
      } else {
        fail(loc, "unknown module entry '" + head + "'");
      }
    }
  }
  if (mode != Mode::Top) fail(loc, "unterminated block at end of file");
  return out;
}

}  // namespace

RunReport run_task_file(const std::string& path, const RunOptions& opts) {
  ParsedFile file = parse_file(path);
  RunReport report;
  int idx = 0;
  for (PendingTask& t : file.tasks) {
    ++idx;
    TaskOutcome outcome;
    outcome.index = idx;
    outcome.op = t.keyword;
    Result res;
    try {
      handlers().at(t.keyword)(file.ctx, t.params, opts, res);
      t.params.check_all_used();
    } catch (const Error& e) {
      if (e.kind == "ParseError" || e.kind == "ValidationError" || e.kind == "NotPointed") throw;
      throw TaskError("task " + std::to_string(idx) + " (" + t.keyword + "): " + e.what());
    } catch (const std::exception& e) {
      throw TaskError("task " + std::to_string(idx) + " (" + t.keyword + "): " + e.what());
    }
    outcome.ok = res.ok;
    outcome.undetermined = res.undetermined;
    outcome.lines = std::move(res.lines);
    json rec;
    rec["task"] = idx;
    rec["op"] = t.keyword;
    rec["ok"] = outcome.ok;
    rec["undetermined"] = outcome.undetermined;
    rec["result"] = std::move(res.j);
    outcome.record = rec.dump();
    report.tasks.push_back(std::move(outcome));
  }
  return report;
}

void render_human(const RunReport& r, std::ostream& os) {
  int passed = 0;
  for (const TaskOutcome& t : r.tasks) {
    std::string status = t.ok ? (t.undetermined ? "ok (undetermined)" : "ok") : "FAIL";
    if (t.ok) ++passed;
    os << "task " << t.index << ": " << t.op << "  [" << status << "]\n";
    for (const std::string& line : t.lines) os << line << "\n";
  }
  os << "summary: " << passed << "/" << r.tasks.size() << " tasks ok\n";
}

void render_machine(const RunReport& r, std::ostream& os) {
  for (const TaskOutcome& t : r.tasks) os << t.record << "\n";
  json summary;
  int passed = 0;
  for (const TaskOutcome& t : r.tasks)
    if (t.ok) ++passed;
  summary["summary"] = {{"tasks", r.tasks.size()}, {"ok", passed}};
  os << summary.dump() << "\n";
}

const std::vector<TaskOpInfo>& task_vocabulary() {
  static const std::vector<TaskOpInfo> v = {
      {"snf", "abelian", "smith_normal_form"},
      {"cokernel", "abelian", "cokernel"},
      {"homology", "abelian", "homology"},
      {"hom_group", "abelian", "hom_group"},
      {"validate_signature", "grading", "validate_signature"},
      {"monomials", "grading", "monomials_of_degree"},
      {"ring_piece", "graded_algebra", "ring_piece"},
      {"module_piece", "graded_algebra", "module_piece"},
      {"shift", "graded_algebra", "shift"},
      {"decompose", "graded_algebra", "decompose"},
      {"day_tensor", "graded_algebra", "day_tensor_piece"},
      {"retract", "graded_algebra", "retract_map"},
      {"hom_fiber", "graded_algebra", "graded_hom_fiber_check"},
      {"koszul", "derived", "koszul_complex"},
      {"derived_quotient", "derived", "derived_quotient"},
      {"homotopy", "derived", "homotopy_groups"},
      {"verify_ses", "derived", "verify_quotient_ses"},
      {"tensor_perfect", "derived", "tensor_with_perfect"},
      {"tower", "completion", "tower_limits"},
      {"milnor", "completion", "milnor_check"},
      {"gradedwise_completion", "completion", "gradedwise_completion"},
      {"derived_completion", "completion", "derived_gradedwise_completion"},
      {"telescope", "completion", "telescope_vanishes"},
      {"is_complete", "completion", "is_derived_gradedwise_complete"},
      {"pro_iso", "completion", "pro_isomorphism_check"},
      {"nakayama", "completion", "derived_nakayama_check"},
      {"completed_tensor", "completion", "completed_tensor"},
      {"comultiply", "comodule", "comultiply"},
      {"counit", "comodule", "counit"},
      {"antipode", "comodule", "antipode"},
      {"coaction_ring", "comodule", "coaction_from_grading"},
      {"grading_from_coaction", "comodule", "grading_from_coaction"},
      {"verify_coaction", "comodule", "verify_coaction_axioms"},
      {"group_ring", "comodule", "module_group_ring"},
      {"module_coaction", "comodule", "comodule_coaction"},
      {"graded_part", "comodule", "graded_part_from_coaction"},
      {"roundtrip", "comodule", "roundtrip_equivalence_check"},
  };
  return v;
}

}  // namespace gralg
