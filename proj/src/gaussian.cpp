#include "faithgraph/gaussian.hpp"

#include <regex>
#include <utility>

#include "faithgraph/errors.hpp"

namespace faithgraph {

namespace {

using Dense = std::vector<std::vector<mpq_class>>;

mpz_class power_of_ten(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Inverts `a` in place by Gauss-Jordan elimination with row pivoting.
// Returns false if `a` is singular.
bool invert_in_place(Dense& a) {
  const std::size_t n = a.size();
  Dense inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const mpq_class scale = 1 / a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  a = std::move(inv);
  return true;
}

// Schur complement of the C block on the rows and columns outside C.
Dense schur_complement(const RationalMatrix& sigma, NodeSet c) {
  const NodeSet rest = sigma.labels().all() - c;
  Dense out = sigma.block(rest, rest);
  if (c.empty()) return out;
  Dense cc = sigma.block(c, c);
  if (!invert_in_place(cc)) throw InputError("conditioning block is singular");
  const Dense rc = sigma.block(rest, c);
  const std::size_t nr = rc.size();
  const std::size_t nc = cc.size();
  Dense tmp(nr, std::vector<mpq_class>(nc, 0));  // Sigma_RC Sigma_CC^-1
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t k = 0; k < nc; ++k) {
      if (rc[r][k] == 0) continue;
      for (std::size_t q = 0; q < nc; ++q) tmp[r][q] += rc[r][k] * cc[k][q];
    }
  }
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t s = 0; s < nr; ++s) {
      for (std::size_t q = 0; q < nc; ++q) out[r][s] -= tmp[r][q] * rc[s][q];
    }
  }
  return out;
}

void require_square_nonempty(const RationalMatrix& m) {
  if (m.size() == 0) throw InputError("matrix is empty");
}

}  // namespace

mpq_class parse_rational(std::string_view raw) {
  const std::string text(trim(raw));
  static const std::regex fraction(R"(([+-]?\d+)/(\d+))");
  static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    mpz_class den(m[2].str(), 10);
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    mpq_class q(mpz_class(m[1].str(), 10), den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(text, m, decimal) && (m[2].length() > 0 || m[3].length() > 0)) {
    const std::string whole = m[2].length() > 0 ? m[2].str() : "0";
    const std::string frac = m[3].str();
    mpq_class q(mpz_class(whole + frac, 10), power_of_ten(frac.size()));
    if (m[4].matched) {
      long e = 0;
      try {
        e = std::stol(m[4].str());
      } catch (const std::exception&) {
        throw InputError("exponent out of range in '" + text + "'");
      }
      if (e > 1000 || e < -1000) throw InputError("exponent out of range in '" + text + "'");
      const mpz_class scale = power_of_ten(static_cast<unsigned long>(e < 0 ? -e : e));
      if (e >= 0) {
        q *= scale;
      } else {
        q /= scale;
      }
    }
    q.canonicalize();
    if (m[1].str() == "-") q = -q;
    return q;
  }
  throw InputError("not a rational number: '" + text + "'");
}

std::string format_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

RationalMatrix::RationalMatrix(NodeLabels labels)
    : labels_(std::move(labels)),
      data_(static_cast<std::size_t>(labels_.size()) * static_cast<std::size_t>(labels_.size()), 0) {}

RationalMatrix RationalMatrix::identity(NodeLabels labels) {
  RationalMatrix m(std::move(labels));
  for (int i = 0; i < m.size(); ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (int r = 0; r < size(); ++r) {
    for (int c = r + 1; c < size(); ++c) {
      if (at(r, c) != at(c, r)) return false;
    }
  }
  return true;
}

std::vector<std::vector<mpq_class>> RationalMatrix::block(NodeSet rows, NodeSet cols) const {
  Dense out;
  out.reserve(static_cast<std::size_t>(rows.size()));
  for (int r : rows) {
    std::vector<mpq_class> row;
    row.reserve(static_cast<std::size_t>(cols.size()));
    for (int c : cols) row.push_back(at(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  require_square_nonempty(m);
  Dense a = m.block(m.labels().all(), m.labels().all());
  if (!invert_in_place(a)) throw InputError("matrix is singular");
  RationalMatrix out(m.labels());
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) {
      out.at(r, c) = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  return out;
}

mpq_class determinant(const RationalMatrix& m) {
  Dense a = m.block(m.labels().all(), m.labels().all());
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

std::optional<int> failing_leading_minor(const RationalMatrix& m) {
  // Without pivoting, the k-th pivot is minor_k / minor_{k-1}, so all
  // leading minors are positive exactly when all pivots are.
  Dense a = m.block(m.labels().all(), m.labels().all());
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    if (a[col][col] <= 0) return static_cast<int>(col) + 1;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return std::nullopt;
}

bool is_positive_definite(const RationalMatrix& m) {
  return m.is_symmetric() && !failing_leading_minor(m);
}

bool is_m_matrix(const RationalMatrix& m) {
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) {
      if (r == c ? m.at(r, c) <= 0 : m.at(r, c) > 0) return false;
    }
  }
  return true;
}

RationalMatrix build_A_G_eps(const MixedGraph& g, const mpq_class& eps) {
  const GraphClassReport report = classify(g);
  if (!report.is_UG) throw InputError("A^{G,eps} needs a simple undirected graph");
  RationalMatrix m = RationalMatrix::identity(g.labels());
  for (const Edge& e : g.edges()) {
    m.at(e.from, e.to) = eps;
    m.at(e.to, e.from) = eps;
  }
  return m;
}

std::string_view to_string(MatrixRole role) noexcept {
  return role == MatrixRole::covariance ? "covariance" : "concentration";
}

mpq_class partial_covariance(const RationalMatrix& sigma, int i, int j, NodeSet c) {
  if (c.contains(i) || c.contains(j) || i == j) {
    throw InputError("partial covariance needs distinct i, j outside the conditioning set");
  }
  const Dense s = schur_complement(sigma, c);
  const NodeSet rest = sigma.labels().all() - c;
  auto position = [&](int v) { return static_cast<std::size_t>((rest & NodeSet::first(v)).size()); };
  return s[position(i)][position(j)];
}

IndependenceModel model_from_covariance(const RationalMatrix& m, MatrixRole role, const Limits& limits) {
  require_square_nonempty(m);
  require_within(m.size(), limits.model_nodes, Limits::kModelNodesHard, "covariance model node count");
  for (int r = 0; r < m.size(); ++r) {
    for (int c = r + 1; c < m.size(); ++c) {
      if (m.at(r, c) != m.at(c, r)) {
        throw InputError("matrix is not symmetric: entry (" + m.labels().name(r) + ", " +
                         m.labels().name(c) + ") differs from its transpose");
      }
    }
  }
  if (auto k = failing_leading_minor(m)) {
    throw InputError("matrix is not positive definite: leading principal minor of order " +
                     std::to_string(*k) + " is not positive");
  }
  const RationalMatrix sigma = role == MatrixRole::covariance ? m : inverse(m);

  NodeSet cached_c;
  bool have_cache = false;
  Dense schur;
  return model_from_elementary(sigma.labels(), [&](int i, NodeSet c) {
    if (!have_cache || cached_c != c) {
      schur = schur_complement(sigma, c);
      cached_c = c;
      have_cache = true;
    }
    const NodeSet rest = sigma.labels().all() - c;
    NodeSet out;
    std::size_t pi = 0;
    for (int v : rest) {
      if (v == i) break;
      ++pi;
    }
    std::size_t pj = 0;
    for (int v : rest) {
      if (v != i && schur[pi][pj] == 0) out = out.with(v);
      ++pj;
    }
    return out;
  });
}

}  // namespace faithgraph
