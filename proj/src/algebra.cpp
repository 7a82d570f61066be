#include "taugp/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "taugp/matrix.hpp"

namespace taugp {

int Quiver::vertex_index(const std::string& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown vertex '" + label + "'");
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex label '" + v + "'");
  for (const auto& a : arrows) {
    if (!seen.insert(a.label).second)
      throw std::invalid_argument("duplicate label '" + a.label + "'");
    if (a.source < 0 || a.source >= static_cast<int>(vertices.size()) ||
        a.target < 0 || a.target >= static_cast<int>(vertices.size()))
      throw std::invalid_argument("arrow '" + a.label + "' has undeclared endpoint");
  }
}

namespace {

void validate_relation(const Quiver& q, const RelationElement& rel) {
  if (rel.terms.empty()) throw std::invalid_argument("empty relation");
  size_t len = rel.terms.front().path.size();
  int src = -1, tgt = -1;
  for (const auto& t : rel.terms) {
    if (t.coeff == 0) throw std::invalid_argument("relation term with zero coefficient");
    if (t.path.size() < 2)
      throw std::invalid_argument("relation term of length < 2 (ideal not admissible)");
    if (t.path.size() != len)
      throw std::invalid_argument("relation is not length-homogeneous");
    for (size_t i = 0; i + 1 < t.path.size(); ++i)
      if (q.arrows[t.path[i]].target != q.arrows[t.path[i + 1]].source)
        throw std::invalid_argument("relation contains a non-composable path");
    int s = q.arrows[t.path.front()].source;
    int e = q.arrows[t.path.back()].target;
    if (src == -1) { src = s; tgt = e; }
    else if (s != src || e != tgt)
      throw std::invalid_argument("relation terms are not parallel paths");
  }
}

std::vector<std::string> path_labels(const Quiver& q, const std::vector<int>& path) {
  std::vector<std::string> l;
  l.reserve(path.size());
  for (int a : path) l.push_back(q.arrows[a].label);
  return l;
}

}  // namespace

const AlgebraElement& BoundQuiverAlgebra::extend(int basis_idx, int arrow_idx) const {
  return ext_table_[basis_idx][arrow_idx];
}

BoundQuiverAlgebra BoundQuiverAlgebra::build(Quiver quiver, std::vector<RelationElement> relations,
                                             Field field, int length_cap) {
  quiver.validate();
  for (const auto& r : relations) validate_relation(quiver, r);

  BoundQuiverAlgebra alg;
  alg.quiver_ = std::move(quiver);
  alg.field_ = field;
  alg.relations_ = std::move(relations);

  const int nv = alg.num_vertices();
  const int na = static_cast<int>(alg.quiver_.arrows.size());
  alg.idempotent_index_.resize(nv);
  for (int v = 0; v < nv; ++v) {
    alg.idempotent_index_[v] = static_cast<int>(alg.basis_.size());
    alg.basis_.push_back({{}, v, v});
  }
  alg.ext_table_.resize(alg.basis_.size(), std::vector<AlgebraElement>(na));

  std::vector<int> prev_layer(alg.basis_.size());
  for (size_t i = 0; i < prev_layer.size(); ++i) prev_layer[i] = static_cast<int>(i);

  // Degree-by-degree saturation: extend the previous layer's residues by one
  // arrow, then quotient by the relation elements landing in this degree.
  for (int deg = 1; !prev_layer.empty(); ++deg) {
    struct Cand { int base; int arrow; std::vector<std::string> labels; };
    std::vector<Cand> cands;
    for (int b : prev_layer)
      for (int a = 0; a < na; ++a)
        if (alg.quiver_.arrows[a].source == alg.basis_[b].target) {
          auto l = path_labels(alg.quiver_, alg.basis_[b].path);
          l.push_back(alg.quiver_.arrows[a].label);
          cands.push_back({b, a, std::move(l)});
        }
    if (cands.empty()) { alg.nilpotency_degree_ = deg - 1; break; }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& x, const Cand& y) { return x.labels < y.labels; });
    auto cand_index = [&](int base, int arrow) {
      for (size_t i = 0; i < cands.size(); ++i)
        if (cands[i].base == base && cands[i].arrow == arrow) return static_cast<int>(i);
      return -1;
    };

    // Ideal component of this degree: every (residue) * (relation) landing here.
    // The leading arrows of a relation term are pushed through the already
    // computed tables; the final arrow lands in candidate coordinates.
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& rel : alg.relations_) {
      int d = static_cast<int>(rel.terms.front().path.size());
      if (d > deg) continue;
      for (int bidx = 0; bidx < static_cast<int>(alg.basis_.size()); ++bidx) {
        const BasisElem& be = alg.basis_[bidx];
        if (static_cast<int>(be.path.size()) != deg - d) continue;
        if (be.target != alg.quiver_.arrows[rel.terms.front().path.front()].source) continue;
        std::vector<mpq_class> row(cands.size(), mpq_class(0));
        bool nonzero = false;
        for (const auto& term : rel.terms) {
          AlgebraElement cur{{mpq_class(1), bidx}};
          for (size_t k = 0; k + 1 < term.path.size(); ++k) {
            AlgebraElement next;
            std::map<int, mpq_class> acc;
            for (const auto& [c, bi] : cur)
              for (const auto& [c2, b2] : alg.ext_table_[bi][term.path[k]])
                acc[b2] += c * c2;
            for (auto& [b2, c2] : acc) {
              c2 = field.reduce(c2);
              if (c2 != 0) next.push_back({c2, b2});
            }
            cur = std::move(next);
          }
          int last = term.path.back();
          for (const auto& [c, bi] : cur) {
            int ci = cand_index(bi, last);
            if (ci < 0) continue;
            row[ci] = field.add(row[ci], field.mul(term.coeff, c));
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }

    std::vector<int> pivots;
    Matrix reduced(field, 0, 0);
    if (!rows.empty()) {
      Matrix m(field, static_cast<int>(rows.size()), static_cast<int>(cands.size()));
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cands.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
      auto ech = m.rref();
      pivots = ech.pivots;
      reduced = ech.mat;
    }
    std::vector<bool> is_pivot(cands.size(), false);
    for (int p : pivots) is_pivot[p] = true;

    // Surviving candidates become basis residues of this degree.
    std::vector<int> new_layer;
    std::vector<int> cand_basis(cands.size(), -1);
    for (size_t i = 0; i < cands.size(); ++i) {
      if (is_pivot[i]) continue;
      int idx = static_cast<int>(alg.basis_.size());
      BasisElem be;
      be.path = alg.basis_[cands[i].base].path;
      be.path.push_back(cands[i].arrow);
      be.source = alg.basis_[cands[i].base].source;
      be.target = alg.quiver_.arrows[cands[i].arrow].target;
      alg.basis_.push_back(std::move(be));
      alg.ext_table_.emplace_back(na);
      cand_basis[i] = idx;
      new_layer.push_back(idx);
    }
    // Normal forms of the eliminated candidates.
    std::vector<AlgebraElement> cand_nf(cands.size());
    for (size_t i = 0; i < cands.size(); ++i)
      if (!is_pivot[i]) cand_nf[i] = {{mpq_class(1), cand_basis[i]}};
    for (size_t r = 0; r < pivots.size(); ++r)
      for (size_t j = 0; j < cands.size(); ++j) {
        if (is_pivot[j] || reduced.at(static_cast<int>(r), static_cast<int>(j)) == 0) continue;
        cand_nf[pivots[r]].push_back(
            {field.neg(reduced.at(static_cast<int>(r), static_cast<int>(j))), cand_basis[j]});
      }
    for (size_t i = 0; i < cands.size(); ++i)
      alg.ext_table_[cands[i].base][cands[i].arrow] = cand_nf[i];

    if (new_layer.empty()) { alg.nilpotency_degree_ = deg - 1; break; }
    if (deg > length_cap)
      throw std::runtime_error("path basis did not saturate below length cap " +
                               std::to_string(length_cap) + " (ideal not admissible?)");
    alg.nilpotency_degree_ = deg;
    prev_layer = std::move(new_layer);
  }

  alg.basis_from_.assign(nv, {});
  for (size_t i = 0; i < alg.basis_.size(); ++i)
    alg.basis_from_[alg.basis_[i].source].push_back(static_cast<int>(i));

  // Multiplication table, closed over the stored basis.
  alg.mult_table_.assign(alg.basis_.size(), std::vector<AlgebraElement>(alg.basis_.size()));
  for (size_t i = 0; i < alg.basis_.size(); ++i)
    for (size_t j = 0; j < alg.basis_.size(); ++j) {
      if (alg.basis_[i].target != alg.basis_[j].source) continue;
      AlgebraElement cur{{mpq_class(1), static_cast<int>(i)}};
      for (int a : alg.basis_[j].path) {
        std::map<int, mpq_class> acc;
        for (const auto& [c, b] : cur)
          for (const auto& [c2, b2] : alg.ext_table_[b][a]) acc[b2] += c * c2;
        cur.clear();
        for (auto& [b2, c2] : acc) {
          c2 = field.reduce(c2);
          if (c2 != 0) cur.push_back({c2, b2});
        }
      }
      alg.mult_table_[i][j] = std::move(cur);
    }
  return alg;
}

std::vector<int> BoundQuiverAlgebra::basis_between(int source, int target) const {
  std::vector<int> out;
  for (int b : basis_from_[source])
    if (basis_[b].target == target) out.push_back(b);
  return out;
}

AlgebraElement BoundQuiverAlgebra::path_normal_form(const std::vector<int>& path, int at_vertex) const {
  AlgebraElement cur{{mpq_class(1), idempotent_index_[at_vertex]}};
  for (int a : path) {
    std::map<int, mpq_class> acc;
    for (const auto& [c, b] : cur) {
      if (basis_[b].target != quiver_.arrows[a].source) continue;
      for (const auto& [c2, b2] : ext_table_[b][a]) acc[b2] += c * c2;
    }
    cur.clear();
    for (auto& [b2, c2] : acc) {
      c2 = field_.reduce(c2);
      if (c2 != 0) cur.push_back({c2, b2});
    }
  }
  return cur;
}

AlgebraElement BoundQuiverAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  std::map<int, mpq_class> acc;
  for (const auto& [cx, bx] : x)
    for (const auto& [cy, by] : y)
      for (const auto& [cz, bz] : mult_table_[bx][by]) acc[bz] += cx * cy * cz;
  AlgebraElement out;
  for (auto& [b, c] : acc) {
    c = field_.reduce(c);
    if (c != 0) out.push_back({c, b});
  }
  return out;
}

std::vector<int> BoundQuiverAlgebra::radical_basis() const {
  std::vector<int> out;
  for (size_t i = 0; i < basis_.size(); ++i)
    if (!basis_[i].path.empty()) out.push_back(static_cast<int>(i));
  return out;
}

BoundQuiverAlgebra BoundQuiverAlgebra::opposite() const {
  Quiver q = quiver_;
  for (auto& a : q.arrows) std::swap(a.source, a.target);
  std::vector<RelationElement> rels = relations_;
  for (auto& r : rels)
    for (auto& t : r.terms) std::reverse(t.path.begin(), t.path.end());
  return build(std::move(q), std::move(rels), field_);
}

BoundQuiverAlgebra BoundQuiverAlgebra::quotient_by_idempotent(const std::set<int>& kill) const {
  Quiver q;
  std::vector<int> vmap(num_vertices(), -1);
  for (int v = 0; v < num_vertices(); ++v)
    if (!kill.count(v)) {
      vmap[v] = static_cast<int>(q.vertices.size());
      q.vertices.push_back(quiver_.vertices[v]);
    }
  std::vector<int> amap(quiver_.arrows.size(), -1);
  for (size_t a = 0; a < quiver_.arrows.size(); ++a) {
    const auto& ar = quiver_.arrows[a];
    if (vmap[ar.source] < 0 || vmap[ar.target] < 0) continue;
    amap[a] = static_cast<int>(q.arrows.size());
    q.arrows.push_back({ar.label, vmap[ar.source], vmap[ar.target]});
  }
  std::vector<RelationElement> rels;
  for (const auto& r : relations_) {
    RelationElement nr;
    for (const auto& t : r.terms) {
      bool alive = true;
      std::vector<int> p;
      for (int a : t.path) {
        if (amap[a] < 0) { alive = false; break; }
        p.push_back(amap[a]);
      }
      if (alive) nr.terms.push_back({t.coeff, std::move(p)});
    }
    if (!nr.terms.empty()) rels.push_back(std::move(nr));
  }
  return build(std::move(q), std::move(rels), field_);
}

BoundQuiverAlgebra BoundQuiverAlgebra::quotient_by_ideal(
    const std::vector<RelationElement>& generators) const {
  std::set<int> arrows_to_delete;
  std::vector<RelationElement> extra;
  for (const auto& g : generators) {
    if (g.terms.empty()) throw std::invalid_argument("unsupported ideal shape");
    if (g.terms.size() == 1 && g.terms.front().path.size() == 1) {
      arrows_to_delete.insert(g.terms.front().path.front());
      continue;
    }
    for (const auto& t : g.terms)
      if (t.path.empty()) throw std::invalid_argument("unsupported ideal shape");
    validate_relation(quiver_, g);
    extra.push_back(g);
  }
  Quiver q;
  q.vertices = quiver_.vertices;
  std::vector<int> amap(quiver_.arrows.size(), -1);
  for (size_t a = 0; a < quiver_.arrows.size(); ++a) {
    if (arrows_to_delete.count(static_cast<int>(a))) continue;
    amap[a] = static_cast<int>(q.arrows.size());
    q.arrows.push_back(quiver_.arrows[a]);
  }
  std::vector<RelationElement> rels;
  auto remap = [&](const RelationElement& r) {
    RelationElement nr;
    for (const auto& t : r.terms) {
      bool alive = true;
      std::vector<int> p;
      for (int a : t.path) {
        if (amap[a] < 0) { alive = false; break; }
        p.push_back(amap[a]);
      }
      if (alive) nr.terms.push_back({t.coeff, std::move(p)});
    }
    return nr;
  };
  for (const auto& r : relations_) {
    auto nr = remap(r);
    if (!nr.terms.empty()) rels.push_back(std::move(nr));
  }
  for (const auto& r : extra) {
    auto nr = remap(r);
    if (!nr.terms.empty()) rels.push_back(std::move(nr));
  }
  return build(std::move(q), std::move(rels), field_);
}

bool BoundQuiverAlgebra::same_presentation(const BoundQuiverAlgebra& o) const {
  if (!(quiver_ == o.quiver_) || !(field_ == o.field_)) return false;
  if (relations_.size() != o.relations_.size()) return false;
  for (size_t i = 0; i < relations_.size(); ++i) {
    const auto& a = relations_[i].terms;
    const auto& b = o.relations_[i].terms;
    if (a.size() != b.size()) return false;
    for (size_t j = 0; j < a.size(); ++j)
      if (a[j].coeff != b[j].coeff || a[j].path != b[j].path) return false;
  }
  return true;
}

std::string BoundQuiverAlgebra::content_key() const {
  std::ostringstream os;
  os << "field=" << field_.describe() << ";v=";
  for (const auto& v : quiver_.vertices) os << v << ",";
  os << ";a=";
  for (const auto& a : quiver_.arrows) os << a.label << ":" << a.source << ">" << a.target << ",";
  os << ";r=";
  for (const auto& r : relations_) {
    for (const auto& t : r.terms) {
      os << t.coeff.get_str() << "*";
      for (int p : t.path) os << p << ".";
      os << "+";
    }
    os << "|";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Text format parser

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

RelationElement parse_relation_expr(const Quiver& q, const std::string& expr, int line) {
  RelationElement rel;
  std::vector<std::pair<int, std::string>> signed_terms;
  std::string cur;
  int sign = 1;
  for (char c : expr) {
    if (c == '+' || c == '-') {
      if (!trim(cur).empty()) {
        signed_terms.push_back({sign, trim(cur)});
        sign = 1;
        cur.clear();
      }
      if (c == '-') sign = -sign;
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty()) signed_terms.push_back({sign, trim(cur)});
  if (signed_terms.empty()) parse_fail(line, "empty relation");

  std::map<std::string, int> arrow_of;
  for (size_t a = 0; a < q.arrows.size(); ++a) arrow_of[q.arrows[a].label] = static_cast<int>(a);

  for (auto& [sgn, text] : signed_terms) {
    RelationTerm term;
    term.coeff = sgn;
    std::stringstream ss(text);
    std::string tok;
    bool first = true;
    while (std::getline(ss, tok, '*')) {
      tok = trim(tok);
      if (tok.empty()) parse_fail(line, "empty factor in relation term");
      bool numeric = std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(c); });
      if (numeric && first) {
        term.coeff = term.coeff * mpq_class(tok);
      } else {
        auto it = arrow_of.find(tok);
        if (it == arrow_of.end()) parse_fail(line, "unknown arrow '" + tok + "'");
        term.path.push_back(it->second);
      }
      first = false;
    }
    if (term.path.empty()) parse_fail(line, "relation term without arrows");
    rel.terms.push_back(std::move(term));
  }
  return rel;
}

}  // namespace

ParsedAlgebraFile parse_algebra_text(const std::string& text) {
  ParsedAlgebraFile out;
  out.field = Field::rationals();
  bool have_vertices = false;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  std::vector<std::pair<int, std::string>> relation_lines;
  std::vector<std::tuple<int, std::string, std::string, std::string>> arrow_lines;
  while (std::getline(is, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    auto colon = s.find(':');
    if (colon == std::string::npos) parse_fail(line, "expected 'directive: ...'");
    std::string head = trim(s.substr(0, colon));
    std::string rest = trim(s.substr(colon + 1));
    if (head == "field") {
      std::stringstream ss(rest);
      std::string kind;
      ss >> kind;
      if (kind == "Q") out.field = Field::rationals();
      else if (kind == "F") {
        long p = 0;
        if (!(ss >> p)) parse_fail(line, "expected 'field: F <prime>'");
        try { out.field = Field::prime(p); }
        catch (const std::exception& e) { parse_fail(line, e.what()); }
      } else parse_fail(line, "unknown field '" + kind + "'");
    } else if (head == "vertices") {
      std::stringstream ss(rest);
      std::string v;
      while (ss >> v) out.quiver.vertices.push_back(v);
      if (out.quiver.vertices.empty()) parse_fail(line, "no vertices listed");
      have_vertices = true;
    } else if (head.rfind("arrow ", 0) == 0) {
      std::string label = trim(head.substr(6));
      auto pos = rest.find("->");
      if (label.empty() || pos == std::string::npos)
        parse_fail(line, "expected 'arrow <label>: <src> -> <tgt>'");
      arrow_lines.push_back({line, label, trim(rest.substr(0, pos)), trim(rest.substr(pos + 2))});
    } else if (head == "relation") {
      relation_lines.push_back({line, rest});
    } else {
      parse_fail(line, "unknown directive '" + head + "'");
    }
  }
  if (!have_vertices) throw std::runtime_error("no 'vertices:' directive in algebra file");
  for (const auto& [ln, label, src, tgt] : arrow_lines) {
    int s, t;
    try {
      s = out.quiver.vertex_index(src);
      t = out.quiver.vertex_index(tgt);
    } catch (const std::exception& e) { parse_fail(ln, e.what()); }
    out.quiver.arrows.push_back({label, s, t});
  }
  try { out.quiver.validate(); }
  catch (const std::exception& e) { throw std::runtime_error(std::string("algebra file: ") + e.what()); }
  for (const auto& [ln, expr] : relation_lines) {
    auto rel = parse_relation_expr(out.quiver, expr, ln);
    try { validate_relation(out.quiver, rel); }
    catch (const std::exception& e) { parse_fail(ln, e.what()); }
    out.relations.push_back(std::move(rel));
  }
  return out;
}

ParsedAlgebraFile parse_algebra_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open algebra file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return parse_algebra_text(os.str());
}

}  // namespace taugp
