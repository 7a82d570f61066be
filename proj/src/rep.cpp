#include "taugp/rep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace taugp {

namespace {

std::map<std::string, AlgebraPtr>& opposite_memo() {
  static std::map<std::string, AlgebraPtr> memo;
  return memo;
}
std::mutex& opposite_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

AlgebraPtr make_algebra(BoundQuiverAlgebra a) {
  return std::make_shared<const BoundQuiverAlgebra>(std::move(a));
}

AlgebraPtr opposite_of(const AlgebraPtr& a) {
  std::lock_guard<std::mutex> lock(opposite_mutex());
  auto& memo = opposite_memo();
  auto it = memo.find(a->content_key());
  if (it != memo.end()) return it->second;
  AlgebraPtr op = make_algebra(a->opposite());
  memo[a->content_key()] = op;
  memo[op->content_key()] = a;
  return op;
}

Representation::Representation(AlgebraPtr algebra, std::vector<int> dims,
                               std::vector<Matrix> arrow_maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), arrow_maps_(std::move(arrow_maps)) {
  validate();
}

void Representation::validate() const {
  const auto& q = algebra_->quiver();
  if (static_cast<int>(dims_.size()) != algebra_->num_vertices())
    throw std::invalid_argument("representation: wrong number of vertex dimensions");
  if (arrow_maps_.size() != q.arrows.size())
    throw std::invalid_argument("representation: wrong number of arrow maps");
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (arrow_maps_[a].rows() != dims_[q.arrows[a].target] ||
        arrow_maps_[a].cols() != dims_[q.arrows[a].source])
      throw std::invalid_argument("representation: arrow map shape mismatch at arrow " +
                                  q.arrows[a].label);
  }
  for (const auto& rel : algebra_->relations()) {
    int src = q.arrows[rel.terms.front().path.front()].source;
    int tgt = q.arrows[rel.terms.front().path.back()].target;
    Matrix acc(field(), dims_[tgt], dims_[src]);
    for (const auto& t : rel.terms) acc = acc + path_action(t.path, src).scaled(t.coeff);
    if (!acc.is_zero())
      throw std::invalid_argument("representation: a defining relation acts nonzero");
  }
}

Representation Representation::zero(AlgebraPtr a) {
  std::vector<int> dims(a->num_vertices(), 0);
  std::vector<Matrix> maps;
  for (const auto& ar : a->quiver().arrows) {
    (void)ar;
    maps.emplace_back(a->field(), 0, 0);
  }
  return Representation(std::move(a), std::move(dims), std::move(maps));
}

Representation Representation::simple(AlgebraPtr a, int vertex) {
  std::vector<int> dims(a->num_vertices(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> maps;
  for (const auto& ar : a->quiver().arrows)
    maps.emplace_back(a->field(), dims[ar.target], dims[ar.source]);
  return Representation(std::move(a), std::move(dims), std::move(maps));
}

Representation Representation::projective(AlgebraPtr a, int vertex) {
  // Basis: the path residues sourced at the vertex, grouped by target;
  // arrows act by right concatenation through the extension table.
  const auto& from = a->basis_from(vertex);
  int n = a->num_vertices();
  std::vector<std::vector<int>> cols(n);  // basis indices at each target vertex
  std::vector<int> pos(a->dimension(), -1);
  for (int b : from) {
    auto& c = cols[a->basis()[b].target];
    pos[b] = static_cast<int>(c.size());
    c.push_back(b);
  }
  std::vector<int> dims(n);
  for (int v = 0; v < n; ++v) dims[v] = static_cast<int>(cols[v].size());
  std::vector<Matrix> maps;
  const auto& q = a->quiver();
  for (size_t ar = 0; ar < q.arrows.size(); ++ar) {
    int u = q.arrows[ar].source, w = q.arrows[ar].target;
    Matrix m(a->field(), dims[w], dims[u]);
    for (int j = 0; j < dims[u]; ++j) {
      int b = cols[u][j];
      for (const auto& [c, b2] : a->extend(b, static_cast<int>(ar)))
        m.set(pos[b2], j, m.at(pos[b2], j) + c);
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(a), std::move(dims), std::move(maps));
}

Representation Representation::injective(AlgebraPtr a, int vertex) {
  AlgebraPtr op = opposite_of(a);
  return projective(op, vertex).dual();
}

Representation Representation::regular(AlgebraPtr a) {
  std::vector<Representation> parts;
  for (int v = 0; v < a->num_vertices(); ++v) parts.push_back(projective(a, v));
  if (parts.empty()) return zero(a);
  return direct_sum(parts);
}

Representation Representation::direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing: supply the algebra");
  AlgebraPtr a = parts[0].algebra_;
  int n = a->num_vertices();
  std::vector<int> dims(n, 0);
  for (const auto& p : parts)
    for (int v = 0; v < n; ++v) dims[v] += p.dims_[v];
  std::vector<Matrix> maps;
  const auto& q = a->quiver();
  for (size_t ar = 0; ar < q.arrows.size(); ++ar) {
    int u = q.arrows[ar].source, w = q.arrows[ar].target;
    Matrix m(a->field(), dims[w], dims[u]);
    int ro = 0, co = 0;
    for (const auto& p : parts) {
      const Matrix& b = p.arrow_maps_[ar];
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
      ro += p.dims_[w];
      co += p.dims_[u];
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(a), std::move(dims), std::move(maps));
}

int Representation::total_dim() const {
  int s = 0;
  for (int d : dims_) s += d;
  return s;
}

Matrix Representation::path_action(const std::vector<int>& path, int source_vertex) const {
  Matrix m = Matrix::identity(field(), dims_[source_vertex]);
  for (int a : path) m = arrow_maps_[a] * m;
  return m;
}

Matrix Representation::basis_action(int b) const {
  const auto& be = algebra_->basis()[b];
  return path_action(be.path, be.source);
}

Representation Representation::sub_representation(const std::vector<Matrix>& span) const {
  int n = algebra_->num_vertices();
  std::vector<int> dims(n);
  for (int v = 0; v < n; ++v) dims[v] = span[v].cols();
  std::vector<Matrix> maps;
  const auto& q = algebra_->quiver();
  for (size_t ar = 0; ar < q.arrows.size(); ++ar) {
    int u = q.arrows[ar].source, w = q.arrows[ar].target;
    auto x = span[w].solve(arrow_maps_[ar] * span[u]);
    if (!x) throw std::invalid_argument("sub_representation: span not closed under the action");
    maps.push_back(std::move(*x));
  }
  return Representation(algebra_, std::move(dims), std::move(maps));
}

Representation Representation::quotient_representation(const std::vector<Matrix>& span,
                                                       std::vector<Matrix>* proj) const {
  int n = algebra_->num_vertices();
  std::vector<Matrix> p(n, Matrix());
  std::vector<int> dims(n);
  for (int v = 0; v < n; ++v) {
    p[v] = span[v].cokernel_projection();
    dims[v] = p[v].rows();
  }
  std::vector<Matrix> maps;
  const auto& q = algebra_->quiver();
  for (size_t ar = 0; ar < q.arrows.size(); ++ar) {
    int u = q.arrows[ar].source, w = q.arrows[ar].target;
    // Y with Y * p[u] = p[w] * X_a; p[u] has full row rank so Y is unique.
    auto yt = p[u].transposed().solve((p[w] * arrow_maps_[ar]).transposed());
    if (!yt) throw std::logic_error("quotient_representation: projection solve failed");
    maps.push_back(yt->transposed());
  }
  if (proj) *proj = p;
  return Representation(algebra_, std::move(dims), std::move(maps));
}

Representation Representation::transport(const AlgebraPtr& other) const {
  const auto& oq = other->quiver();
  const auto& q = algebra_->quiver();
  std::vector<int> dims(other->num_vertices());
  for (int v = 0; v < other->num_vertices(); ++v)
    dims[v] = dims_[q.vertex_index(oq.vertices[v])];
  std::vector<Matrix> maps;
  for (const auto& ar : oq.arrows) {
    int found = -1;
    for (size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].label == ar.label) found = static_cast<int>(a);
    if (found < 0) throw std::invalid_argument("transport: no arrow labeled " + ar.label);
    maps.push_back(arrow_maps_[found]);
  }
  return Representation(other, std::move(dims), std::move(maps));
}

Representation Representation::dual() const {
  AlgebraPtr op = opposite_of(algebra_);
  // opposite() keeps arrow order and labels, reversing endpoints, so
  // arrow i corresponds to arrow i.
  std::vector<Matrix> maps;
  for (const auto& m : arrow_maps_) maps.push_back(m.transposed());
  return Representation(op, dims_, std::move(maps));
}

bool Representation::operator==(const Representation& o) const {
  if (algebra_ != o.algebra_ && !algebra_->same_presentation(*o.algebra_)) return false;
  return dims_ == o.dims_ && arrow_maps_ == o.arrow_maps_;
}

// ---------------------------------------------------------------------------
// ModuleMap

ModuleMap ModuleMap::make(const Representation& src, const Representation& tgt,
                          std::vector<Matrix> maps) {
  ModuleMap f;
  f.source = &src;
  f.target = &tgt;
  f.vertex_maps = std::move(maps);
  return f;
}

ModuleMap ModuleMap::owning(Representation src, Representation tgt, std::vector<Matrix> maps) {
  ModuleMap f;
  f.source_owned = std::make_shared<const Representation>(std::move(src));
  f.target_owned = std::make_shared<const Representation>(std::move(tgt));
  f.source = f.source_owned.get();
  f.target = f.target_owned.get();
  f.vertex_maps = std::move(maps);
  return f;
}

ModuleMap ModuleMap::identity(const Representation& m) {
  std::vector<Matrix> maps;
  for (int v = 0; v < m.algebra()->num_vertices(); ++v)
    maps.push_back(Matrix::identity(m.field(), m.dim(v)));
  return make(m, m, std::move(maps));
}

ModuleMap ModuleMap::zero_map(const Representation& src, const Representation& tgt) {
  std::vector<Matrix> maps;
  for (int v = 0; v < src.algebra()->num_vertices(); ++v)
    maps.emplace_back(src.field(), tgt.dim(v), src.dim(v));
  return make(src, tgt, std::move(maps));
}

bool ModuleMap::is_intertwiner() const {
  const auto& q = source->algebra()->quiver();
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int u = q.arrows[a].source, w = q.arrows[a].target;
    if (!(target->arrow_map(static_cast<int>(a)) * vertex_maps[u] -
          vertex_maps[w] * source->arrow_map(static_cast<int>(a)))
             .is_zero())
      return false;
  }
  return true;
}

bool ModuleMap::is_zero() const {
  for (const auto& m : vertex_maps)
    if (!m.is_zero()) return false;
  return true;
}

bool ModuleMap::is_invertible() const {
  for (const auto& m : vertex_maps)
    if (!m.is_invertible()) return false;
  return true;
}

ModuleMap ModuleMap::inverse() const {
  ModuleMap f = *this;
  f.source = target;
  f.target = source;
  std::swap(f.source_owned, f.target_owned);
  for (auto& m : f.vertex_maps) m = m.inverse();
  return f;
}

ModuleMap ModuleMap::then(const ModuleMap& next) const {
  ModuleMap f;
  f.source = source;
  f.target = next.target;
  f.source_owned = source_owned;
  f.target_owned = next.target_owned;
  for (size_t v = 0; v < vertex_maps.size(); ++v)
    f.vertex_maps.push_back(next.vertex_maps[v] * vertex_maps[v]);
  return f;
}

ModuleMap ModuleMap::plus(const ModuleMap& o) const {
  ModuleMap f = *this;
  for (size_t v = 0; v < vertex_maps.size(); ++v)
    f.vertex_maps[v] = vertex_maps[v] + o.vertex_maps[v];
  return f;
}

ModuleMap ModuleMap::scaled(const mpq_class& c) const {
  ModuleMap f = *this;
  for (auto& m : f.vertex_maps) m = m.scaled(c);
  return f;
}

ModuleMap ModuleMap::power(int n) const {
  ModuleMap acc = ModuleMap::identity(*source);
  acc.source_owned = source_owned;
  acc.target_owned = source_owned;
  ModuleMap base = *this;
  while (n > 0) {
    if (n & 1) acc = acc.then(base);
    base = base.then(base);
    n >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Hom spaces

HomSpace hom(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra() && !m.algebra()->same_presentation(*n.algebra()))
    throw std::invalid_argument("hom: modules over different algebras");
  const auto& q = m.algebra()->quiver();
  int nv = m.algebra()->num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  int unknowns = off[nv];
  int rows = 0;
  for (const auto& ar : q.arrows) rows += n.dim(ar.target) * m.dim(ar.source);
  Matrix sys(m.field(), rows, unknowns);
  int r0 = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int u = q.arrows[a].source, w = q.arrows[a].target;
    const Matrix& na = n.arrow_map(static_cast<int>(a));
    const Matrix& ma = m.arrow_map(static_cast<int>(a));
    // constraint: (N_a f_u - f_w M_a)(i,j) = 0, i < n.dim(w), j < m.dim(u)
    for (int i = 0; i < n.dim(w); ++i)
      for (int j = 0; j < m.dim(u); ++j) {
        int row = r0 + i * m.dim(u) + j;
        for (int k = 0; k < n.dim(u); ++k)
          sys.set(row, off[u] + k * m.dim(u) + j, sys.at(row, off[u] + k * m.dim(u) + j) + na.at(i, k));
        for (int l = 0; l < m.dim(w); ++l)
          sys.set(row, off[w] + i * m.dim(w) + l, sys.at(row, off[w] + i * m.dim(w) + l) - ma.at(l, j));
      }
    r0 += n.dim(w) * m.dim(u);
  }
  Matrix k = sys.kernel_basis();
  HomSpace h;
  for (int c = 0; c < k.cols(); ++c) {
    std::vector<Matrix> maps;
    for (int v = 0; v < nv; ++v) {
      Matrix fv(m.field(), n.dim(v), m.dim(v));
      for (int i = 0; i < n.dim(v); ++i)
        for (int j = 0; j < m.dim(v); ++j) fv.at(i, j) = k.at(off[v] + i * m.dim(v) + j, c);
      maps.push_back(std::move(fv));
    }
    h.basis.push_back(ModuleMap::make(m, n, std::move(maps)));
  }
  return h;
}

int dim_hom(const Representation& m, const Representation& n) { return hom(m, n).dim(); }

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

ModuleMap combine(const Representation& m, const Representation& n,
                  const std::vector<ModuleMap>& basis, const std::vector<mpq_class>& coeffs) {
  ModuleMap f = ModuleMap::zero_map(m, n);
  for (size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) f = f.plus(basis[i].scaled(coeffs[i]));
  return f;
}

}  // namespace

std::optional<ModuleMap> is_isomorphic(const Representation& m, const Representation& n) {
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.total_dim() == 0) return ModuleMap::identity(m);
  HomSpace h = hom(m, n);
  int e = dim_hom(m, m);
  if (h.dim() != e || dim_hom(n, m) != e || dim_hom(n, n) != e) return std::nullopt;
  for (const auto& f : h.basis)
    if (f.is_invertible()) return f;
  // Small deterministic combinations, then seeded random ones.
  int nb = std::min<int>(h.dim(), 4);
  std::vector<mpq_class> coeffs(h.basis.size(), 0);
  std::vector<int> idx(nb);
  const int lo = -2, hi = 2, span = hi - lo + 1;
  int total = 1;
  for (int i = 0; i < nb; ++i) total *= span;
  for (int code = 0; code < total; ++code) {
    int c = code;
    std::fill(coeffs.begin(), coeffs.end(), mpq_class(0));
    for (int i = 0; i < nb; ++i) {
      coeffs[i] = lo + c % span;
      c /= span;
    }
    ModuleMap f = combine(m, n, h.basis, coeffs);
    if (f.is_invertible()) return f;
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    for (auto& c : coeffs) c = val(rng);
    ModuleMap f = combine(m, n, h.basis, coeffs);
    if (f.is_invertible()) return f;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

// Express an endomorphism in the coordinates of a Hom basis.
struct EndCoords {
  Matrix stacked;  // entries x basisdim, columns are vectorized basis maps
  const HomSpace* space;
  int entries;

  explicit EndCoords(const HomSpace& h) : space(&h) {
    const Representation& m = *h.basis.front().source;
    entries = 0;
    for (const auto& mat : h.basis.front().vertex_maps) entries += mat.rows() * mat.cols();
    stacked = Matrix(m.field(), entries, h.dim());
    for (int c = 0; c < h.dim(); ++c) {
      int r = 0;
      for (const auto& mat : h.basis[c].vertex_maps)
        for (int i = 0; i < mat.rows(); ++i)
          for (int j = 0; j < mat.cols(); ++j) stacked.at(r++, c) = mat.at(i, j);
    }
  }

  std::vector<mpq_class> of(const ModuleMap& f) const {
    Matrix b(stacked.field(), entries, 1);
    int r = 0;
    for (const auto& mat : f.vertex_maps)
      for (int i = 0; i < mat.rows(); ++i)
        for (int j = 0; j < mat.cols(); ++j) b.at(r++, 0) = mat.at(i, j);
    auto x = stacked.solve(b);
    if (!x) throw std::logic_error("endomorphism not in the computed End basis span");
    std::vector<mpq_class> out(x->rows());
    for (int i = 0; i < x->rows(); ++i) out[i] = x->at(i, 0);
    return out;
  }
};

mpq_class module_trace(const ModuleMap& f) {
  mpq_class t = 0;
  for (const auto& m : f.vertex_maps)
    for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return f.source->field().reduce(t);
}

// Radical of End(M) as the kernel of the module-trace form, verified
// nilpotent (which makes the answer exact over any field; over a prime
// field the verification can fail, in which case we refuse rather than
// guess).
struct EndRadical {
  int dim_semisimple;  // dim End / J
  bool verified;
};

EndRadical end_radical(const Representation& m, const HomSpace& end) {
  int e = end.dim();
  Field f = m.field();
  Matrix gram(f, e, e);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) gram.set(i, j, module_trace(end.basis[i].then(end.basis[j])));
  Matrix ker = gram.kernel_basis();
  int jdim = ker.cols();
  EndRadical out{e - jdim, true};
  if (jdim == 0) return out;
  // Verify nilpotency of the span: iterate products until the span of
  // J^(2^k) stops shrinking or hits zero.
  std::vector<ModuleMap> layer;
  for (int c = 0; c < jdim; ++c) {
    std::vector<mpq_class> coeffs(e);
    for (int i = 0; i < e; ++i) coeffs[i] = ker.at(i, c);
    layer.push_back(combine(*end.basis[0].source, *end.basis[0].source, end.basis, coeffs));
  }
  EndCoords coords(end);
  for (int round = 0; round < 2 * e + 2 && !layer.empty(); ++round) {
    // span of pairwise products of the current layer with itself
    std::vector<std::vector<mpq_class>> prods;
    for (const auto& a : layer)
      for (const auto& b : layer) {
        ModuleMap p = a.then(b);
        if (!p.is_zero()) prods.push_back(coords.of(p));
      }
    if (prods.empty()) return out;  // nilpotent, certified
    Matrix span(f, e, static_cast<int>(prods.size()));
    for (size_t c = 0; c < prods.size(); ++c)
      for (int i = 0; i < e; ++i) span.at(i, static_cast<int>(c)) = prods[c][i];
    Matrix basis = span.column_space_basis();
    if (basis.cols() >= static_cast<int>(layer.size())) {
      out.verified = false;  // span stopped shrinking without vanishing
      return out;
    }
    std::vector<ModuleMap> next;
    for (int c = 0; c < basis.cols(); ++c) {
      std::vector<mpq_class> coeffs(e);
      for (int i = 0; i < e; ++i) coeffs[i] = basis.at(i, c);
      next.push_back(combine(*end.basis[0].source, *end.basis[0].source, end.basis, coeffs));
    }
    layer = std::move(next);
  }
  out.verified = layer.empty();
  return out;
}

// Rational eigenvalue candidates of an endomorphism: rational roots of
// its minimal polynomial (via the rational root theorem), plus small
// integers. Over a small prime field: every scalar.
std::vector<mpq_class> eigen_candidates(const ModuleMap& f, const EndCoords& coords) {
  const Field& fld = f.source->field();
  std::vector<mpq_class> out = {0, 1, -1, 2, -2, 3, -3};
  if (fld.kind == Field::Kind::Prime) {
    if (fld.p <= 64) {
      out.clear();
      for (long i = 0; i < fld.p; ++i) out.push_back(mpq_class(i));
    }
    return out;
  }
  // minimal polynomial: first linear dependence among 1, f, f^2, ...
  int e = coords.space->dim();
  std::vector<std::vector<mpq_class>> pows;
  ModuleMap p = ModuleMap::identity(*f.source);
  for (int k = 0; k <= e; ++k) {
    pows.push_back(coords.of(p));
    Matrix m(fld, e, static_cast<int>(pows.size()));
    for (size_t c = 0; c < pows.size(); ++c)
      for (int i = 0; i < e; ++i) m.at(i, static_cast<int>(c)) = pows[c][i];
    if (m.rank() < static_cast<int>(pows.size())) {
      // dependency gives the monic minimal polynomial of degree k
      Matrix lhs = m.columns([&] {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        return idx;
      }());
      Matrix rhs(fld, e, 1);
      for (int i = 0; i < e; ++i) rhs.at(i, 0) = pows.back()[i];
      auto sol = lhs.solve(rhs);
      if (!sol) break;
      // f^k = sum c_i f^i; roots of x^k - sum c_i x^i
      mpz_class den(1);
      for (int i = 0; i < k; ++i) den = den * sol->at(i, 0).get_den() / gcd(den, sol->at(i, 0).get_den());
      std::vector<mpz_class> ip(k + 1);
      ip[k] = den;
      for (int i = 0; i < k; ++i) {
        mpq_class c = sol->at(i, 0) * den;
        ip[i] = -c.get_num();  // exact by construction
      }
      while (!ip.empty() && ip.front() == 0) ip.erase(ip.begin());
      if (ip.size() >= 2) {
        mpz_class a0 = abs(ip.front()), an = abs(ip.back());
        auto divisors = [](const mpz_class& n) {
          std::vector<mpz_class> ds;
          if (n == 0) return ds;
          for (mpz_class d = 1; d * d <= n && d < 100000; ++d)
            if (n % d == 0) {
              ds.push_back(d);
              ds.push_back(n / d);
            }
          return ds;
        };
        for (const auto& p0 : divisors(a0))
          for (const auto& q0 : divisors(an)) {
            for (int s : {1, -1}) {
              mpq_class cand(s * p0, q0);
              cand.canonicalize();
              out.push_back(cand);
            }
          }
      }
      break;
    }
    p = p.then(f);
  }
  std::sort(out.begin(), out.end(), [](const mpq_class& a, const mpq_class& b) {
    return cmp(a, b) < 0;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Piece {
  Representation rep;
  std::vector<Matrix> inclusion;  // columns in original-module coordinates
};

bool is_scalar_multiple_of_identity(const ModuleMap& f) {
  std::optional<mpq_class> c;
  for (const auto& m : f.vertex_maps) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        if (i == j) {
          if (!c) c = m.at(i, i);
          else if (m.at(i, i) != *c) return false;
        } else if (m.at(i, j) != 0) {
          return false;
        }
      }
  }
  return true;
}

void split_recursive(const Representation& rep, const std::vector<Matrix>& inclusion,
                     std::vector<Piece>& out, int depth) {
  if (depth > 64) throw std::runtime_error("decomposition failure: recursion depth exceeded");
  if (rep.total_dim() == 0) return;
  HomSpace end = hom(rep, rep);
  if (end.dim() == 1) {
    out.push_back({rep, inclusion});
    return;
  }
  EndRadical rad = end_radical(rep, end);
  if (rad.verified && rad.dim_semisimple == 1) {
    out.push_back({rep, inclusion});
    return;
  }
  EndCoords coords(end);
  auto try_split = [&](const ModuleMap& g) -> bool {
    ModuleMap h = g.power(rep.total_dim());
    if (h.is_zero() || h.is_invertible()) return false;
    int nv = rep.algebra()->num_vertices();
    std::vector<Matrix> kin(nv, Matrix()), iin(nv, Matrix());
    for (int v = 0; v < nv; ++v) {
      kin[v] = h.vertex_maps[v].kernel_basis();
      iin[v] = h.vertex_maps[v].column_space_basis();
      if (kin[v].cols() + iin[v].cols() != rep.dim(v))
        throw std::logic_error("fitting split dimensions disagree");
    }
    Representation kr = rep.sub_representation(kin);
    Representation ir = rep.sub_representation(iin);
    std::vector<Matrix> kincl(nv, Matrix()), iincl(nv, Matrix());
    for (int v = 0; v < nv; ++v) {
      kincl[v] = inclusion[v] * kin[v];
      iincl[v] = inclusion[v] * iin[v];
    }
    split_recursive(kr, kincl, out, depth + 1);
    split_recursive(ir, iincl, out, depth + 1);
    return true;
  };
  // Candidates: basis endomorphisms and their scalar shifts, pairwise
  // combinations, then seeded random combinations.
  for (const auto& f : end.basis) {
    if (is_scalar_multiple_of_identity(f)) continue;
    for (const auto& lam : eigen_candidates(f, coords)) {
      ModuleMap g = f.plus(ModuleMap::identity(rep).scaled(-lam));
      if (try_split(g)) return;
    }
  }
  for (size_t i = 0; i + 1 < end.basis.size() && i < 6; ++i)
    for (size_t j = i + 1; j < end.basis.size() && j < 7; ++j) {
      if (try_split(end.basis[i].plus(end.basis[j]))) return;
      if (try_split(end.basis[i].plus(end.basis[j].scaled(-1)))) return;
    }
  std::mt19937 rng(0xdec0);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<mpq_class> coeffs(end.basis.size());
    for (auto& c : coeffs) c = val(rng);
    ModuleMap g = combine(rep, rep, end.basis, coeffs);
    for (const auto& lam : eigen_candidates(g, coords))
      if (try_split(g.plus(ModuleMap::identity(rep).scaled(-lam)))) return;
  }
  if (rad.verified)
    throw std::runtime_error(
        "decomposition failure: endomorphism ring is not split local and no idempotent was "
        "found within the search budget");
  throw std::runtime_error(
      "decomposition failure: radical computation is inconclusive over this field");
}

}  // namespace

Decomposition decompose(const Representation& m) {
  Decomposition d;
  int nv = m.algebra()->num_vertices();
  if (m.total_dim() == 0) {
    d.from_sum = ModuleMap::owning(m, m, ModuleMap::identity(m).vertex_maps);
    d.to_sum = d.from_sum;
    return d;
  }
  std::vector<Matrix> id(nv, Matrix());
  for (int v = 0; v < nv; ++v) id[v] = Matrix::identity(m.field(), m.dim(v));
  std::vector<Piece> pieces;
  split_recursive(m, id, pieces, 0);
  // Group by isomorphism class.
  std::vector<Representation> projectives;
  for (int v = 0; v < nv; ++v) projectives.push_back(Representation::projective(m.algebra(), v));
  for (auto& piece : pieces) {
    bool placed = false;
    for (auto& part : d.parts) {
      if (iso_class_key(part.rep) != iso_class_key(piece.rep)) continue;
      auto iso = is_isomorphic(piece.rep, part.rep);
      if (iso) {
        // inclusion of this copy, rewritten as a map from part.rep
        std::vector<Matrix> incl(nv, Matrix());
        for (int v = 0; v < nv; ++v)
          incl[v] = piece.inclusion[v] * iso->vertex_maps[v].inverse();
        part.inclusions.push_back(std::move(incl));
        ++part.multiplicity;
        placed = true;
        break;
      }
    }
    if (!placed) {
      Decomposition::Part part{piece.rep, 1, false, -1, {}};
      part.inclusions.push_back(piece.inclusion);
      for (int v = 0; v < nv; ++v)
        if (is_isomorphic(piece.rep, projectives[v])) {
          part.projective = true;
          part.projective_vertex = v;
          break;
        }
      d.parts.push_back(std::move(part));
    }
  }
  // Certificate: the assembled inclusion is a vertexwise square matrix;
  // it must be invertible, and its inverse is the other direction.
  std::vector<Representation> copies;
  for (const auto& part : d.parts)
    for (int c = 0; c < part.multiplicity; ++c) copies.push_back(part.rep);
  Representation sum = Representation::direct_sum(copies);
  std::vector<Matrix> from(nv, Matrix());
  for (int v = 0; v < nv; ++v) {
    Matrix acc(m.field(), m.dim(v), 0);
    for (const auto& part : d.parts)
      for (const auto& incl : part.inclusions) acc = acc.hstack(incl[v]);
    if (!acc.is_invertible())
      throw std::logic_error("decomposition certificate is not invertible");
    from[v] = std::move(acc);
  }
  std::vector<Matrix> to(nv, Matrix());
  for (int v = 0; v < nv; ++v) to[v] = from[v].inverse();
  d.from_sum = ModuleMap::owning(sum, m, std::move(from));
  d.to_sum = ModuleMap::owning(m, sum, std::move(to));
  if (!d.from_sum.is_intertwiner() || !d.to_sum.is_intertwiner())
    throw std::logic_error("decomposition certificate fails to intertwine");
  return d;
}

// ---------------------------------------------------------------------------
// Fac / Sub / annihilator

bool fac_membership(const Representation& m, const Representation& t) {
  if (m.total_dim() == 0) return true;
  HomSpace h = hom(t, m);
  for (int v = 0; v < m.algebra()->num_vertices(); ++v) {
    if (m.dim(v) == 0) continue;
    Matrix acc(m.field(), m.dim(v), 0);
    for (const auto& f : h.basis) acc = acc.hstack(f.vertex_maps[v]);
    if (acc.rank() < m.dim(v)) return false;
  }
  return true;
}

bool sub_membership(const Representation& m, const Representation& n) {
  if (m.total_dim() == 0) return true;
  HomSpace h = hom(m, n);
  for (int v = 0; v < m.algebra()->num_vertices(); ++v) {
    if (m.dim(v) == 0) continue;
    Matrix acc(m.field(), 0, m.dim(v));
    for (const auto& f : h.basis) acc = acc.vstack(f.vertex_maps[v]);
    if (acc.rank() < m.dim(v)) return false;
  }
  return true;
}

std::vector<AlgebraElement> annihilator(const Representation& t) {
  const auto& alg = *t.algebra();
  int nb = alg.dimension();
  int nv = alg.num_vertices();
  // Row blocks indexed by (source, target) vertex pairs.
  std::vector<std::vector<int>> off(nv, std::vector<int>(nv, 0));
  int rows = 0;
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v) {
      off[u][v] = rows;
      rows += t.dim(v) * t.dim(u);
    }
  Matrix sys(t.field(), rows, nb);
  for (int b = 0; b < nb; ++b) {
    const auto& be = alg.basis()[b];
    Matrix act = t.basis_action(b);
    for (int i = 0; i < act.rows(); ++i)
      for (int j = 0; j < act.cols(); ++j)
        sys.set(off[be.source][be.target] + i * act.cols() + j, b, act.at(i, j));
  }
  Matrix k = sys.kernel_basis();
  std::vector<AlgebraElement> out;
  for (int c = 0; c < k.cols(); ++c) {
    AlgebraElement el;
    for (int b = 0; b < nb; ++b)
      if (k.at(b, c) != 0) el.push_back({k.at(b, c), b});
    out.push_back(std::move(el));
  }
  return out;
}

std::string iso_class_key(const Representation& m) {
  int nv = m.algebra()->num_vertices();
  std::vector<int> dims = m.dims();
  std::sort(dims.begin(), dims.end());
  // top: dimension over the radical image; socle: common kernel of the
  // outgoing arrow maps. Both are vertexwise iso-invariants.
  std::vector<int> top(nv), soc(nv);
  const auto& q = m.algebra()->quiver();
  for (int v = 0; v < nv; ++v) {
    Matrix into(m.field(), m.dim(v), 0);
    Matrix outof(m.field(), 0, m.dim(v));
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].target == v) into = into.hstack(m.arrow_map(static_cast<int>(a)));
      if (q.arrows[a].source == v) outof = outof.vstack(m.arrow_map(static_cast<int>(a)));
    }
    top[v] = m.dim(v) - into.rank();
    soc[v] = m.dim(v) - outof.rank();
  }
  std::sort(top.begin(), top.end());
  std::sort(soc.begin(), soc.end());
  std::ostringstream os;
  os << "d";
  for (int d : dims) os << ":" << d;
  os << ";e:" << dim_hom(m, m) << ";t";
  for (int d : top) os << ":" << d;
  os << ";s";
  for (int d : soc) os << ":" << d;
  return os.str();
}

}  // namespace taugp
