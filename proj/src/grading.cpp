#include "gralg/grading.hpp"

#include <algorithm>
#include <sstream>

namespace gralg {

Degree deg_add(const Degree& a, const Degree& b) {
  Degree r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Degree deg_sub(const Degree& a, const Degree& b) {
  Degree r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Degree deg_scale(long n, const Degree& a) {
  Degree r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = n * a[i];
  return r;
}

Degree deg_zero(int dim) { return Degree(dim, Rat(0)); }

std::string deg_str(const Degree& d) {
  std::ostringstream os;
  if (d.size() != 1) os << "(";
  for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i].get_str();
  if (d.size() != 1) os << ")";
  return os.str();
}

bool DegreeLess::operator()(const Degree& a, const Degree& b) const {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

long rat_floor(const Rat& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!z.fits_slong_p()) throw std::overflow_error("degree weight out of range");
  return z.get_si();
}

Rat GradingSignature::weight_of(const Degree& d) const {
  Rat w = 0;
  for (int i = 0; i < dim; ++i) w += weight[static_cast<size_t>(i)] * d[static_cast<size_t>(i)];
  return w;
}

Degree GradingSignature::monomial_degree(const Exp& e) const {
  Degree d = deg_zero(dim);
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) d = deg_add(d, deg_scale(e[i], gen_degrees[i]));
  return d;
}

PointednessCertificate validate(const GradingSignature& sig) {
  if (static_cast<int>(sig.weight.size()) != sig.dim)
    throw ValidationError("weight functional has wrong dimension");
  PointednessCertificate cert;
  for (size_t i = 0; i < sig.gen_degrees.size(); ++i) {
    if (static_cast<int>(sig.gen_degrees[i].size()) != sig.dim)
      throw ValidationError("generator degree has wrong dimension");
    Rat w = sig.weight_of(sig.gen_degrees[i]);
    if (!(w > 0))
      throw NotPointed("generator " + std::to_string(i) + " has weight " + w.get_str());
    cert.gen_weights.push_back(w);
  }
  return cert;
}

namespace {
void monomials_rec(const GradingSignature& sig, size_t var, Degree rest, Exp& cur,
                   std::vector<Exp>& out) {
  if (var == sig.gen_degrees.size()) {
    for (const Rat& c : rest)
      if (c != 0) return;
    out.push_back(cur);
    return;
  }
  Rat wrest = sig.weight_of(rest);
  if (wrest < 0) return;
  Rat wv = sig.weight_of(sig.gen_degrees[var]);
  long emax = rat_floor(wrest / wv);
  for (long e = emax; e >= 0; --e) {  // descending lex
    cur[var] = e;
    monomials_rec(sig, var + 1, deg_sub(rest, deg_scale(e, sig.gen_degrees[var])), cur, out);
  }
  cur[var] = 0;
}

void cone_rec(const GradingSignature& sig, size_t var, const Degree& acc, const Rat& room,
              std::set<Degree, DegreeLess>& out) {
  if (var == sig.gen_degrees.size()) {
    out.insert(acc);
    return;
  }
  Rat wv = sig.weight_of(sig.gen_degrees[var]);
  long emax = rat_floor(room / wv);
  for (long e = 0; e <= emax; ++e)
    cone_rec(sig, var + 1, deg_add(acc, deg_scale(e, sig.gen_degrees[var])),
             room - e * wv, out);
}
}  // namespace

std::vector<Exp> monomials_of_degree(const GradingSignature& sig, const Degree& g) {
  std::vector<Exp> out;
  Exp cur(sig.gen_degrees.size(), 0);
  monomials_rec(sig, 0, g, cur, out);
  return out;
}

std::vector<Degree> cone_degrees(const GradingSignature& sig, const Rat& wmax) {
  std::set<Degree, DegreeLess> degs;
  if (wmax >= 0) cone_rec(sig, 0, deg_zero(sig.dim), wmax, degs);
  return sort_degrees(sig, std::move(degs));
}

std::vector<Degree> sort_degrees(const GradingSignature& sig, std::set<Degree, DegreeLess> degs) {
  std::vector<Degree> v(degs.begin(), degs.end());
  std::stable_sort(v.begin(), v.end(), [&](const Degree& a, const Degree& b) {
    Rat wa = sig.weight_of(a), wb = sig.weight_of(b);
    if (wa < wb) return true;
    if (wb < wa) return false;
    return DegreeLess{}(a, b);
  });
  return v;
}

}  // namespace gralg
