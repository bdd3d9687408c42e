#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faithgraph/independence_model.hpp"
#include "faithgraph/mixed_graph.hpp"
#include "faithgraph/node_labels.hpp"

namespace faithgraph {

/// Exact rational from "p/q", an integer, or a decimal such as "-0.125" or
/// "1e-3". Throws InputError otherwise.
mpq_class parse_rational(std::string_view text);
/// Canonical text: "p/q" in lowest terms, or an integer.
std::string format_rational(const mpq_class& q);

/// Square matrix of exact rationals with a label per row and column.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  /// Zero matrix.
  explicit RationalMatrix(NodeLabels labels);
  static RationalMatrix identity(NodeLabels labels);

  int size() const noexcept { return labels_.size(); }
  const NodeLabels& labels() const noexcept { return labels_; }

  const mpq_class& at(int r, int c) const { return data_[index(r, c)]; }
  mpq_class& at(int r, int c) { return data_[index(r, c)]; }

  bool is_symmetric() const;
  /// The square submatrix on rows `rows` and columns `cols`, in index order.
  std::vector<std::vector<mpq_class>> block(NodeSet rows, NodeSet cols) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(c);
  }

  NodeLabels labels_;
  std::vector<mpq_class> data_;
};

/// Gauss-Jordan inverse. Throws InputError for a singular matrix.
RationalMatrix inverse(const RationalMatrix& m);
mpq_class determinant(const RationalMatrix& m);

/// Size of the first leading principal minor that is not positive, if any.
std::optional<int> failing_leading_minor(const RationalMatrix& m);
/// Symmetric with every leading principal minor positive.
bool is_positive_definite(const RationalMatrix& m);

/// Positive diagonal and non-positive off-diagonal entries.
bool is_m_matrix(const RationalMatrix& m);

/// A^{G,eps}: 1 on the diagonal, eps for adjacent pairs, 0 elsewhere. Throws
/// InputError unless `g` is a simple undirected graph.
RationalMatrix build_A_G_eps(const MixedGraph& g, const mpq_class& eps);

enum class MatrixRole { covariance, concentration };

std::string_view to_string(MatrixRole role) noexcept;

/// Sigma_ij - Sigma_iC Sigma_CC^-1 Sigma_Cj for disjoint i, j, C.
mpq_class partial_covariance(const RationalMatrix& sigma, int i, int j, NodeSet c);

/// J(Sigma) of the regular Gaussian with covariance `m` (or covariance m^-1
/// for the concentration role). <i,j|C> holds exactly when the partial
/// covariance vanishes; set statements follow by composition. Throws
/// InputError naming the failing minor when `m` is not symmetric positive
/// definite.
IndependenceModel model_from_covariance(const RationalMatrix& m,
                                        MatrixRole role = MatrixRole::covariance,
                                        const Limits& limits = {});

}  // namespace faithgraph
