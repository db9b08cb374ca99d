#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace flatnorm {

using CellId = std::int64_t;

/// Cubical grid complex in 2D or 3D, optionally periodic per axis.
///
/// Cells of each degree are enumerated once at construction, in lexicographic
/// order by coordinate tuple and then by variant (axis label for edges,
/// axis-pair label XY < XZ < YZ for 3D faces). Ids are dense per degree and
/// identical across builds with identical arguments. Orientation is fixed:
/// edges point along positive axes; higher cells carry the orientation of
/// their spanned axes in increasing order, with boundary signs given by the
/// interval product rule.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class CubicalComplex {
 public:
  CubicalComplex(int dimension, std::array<int, 3> extent,
                 std::array<bool, 3> periodic);

  static std::shared_ptr<const CubicalComplex> create(
      int dimension, std::array<int, 3> extent, std::array<bool, 3> periodic);

  int dimension() const { return dim_; }
  const std::array<int, 3>& extent() const { return extent_; }
  const std::array<bool, 3>& periodic() const { return periodic_; }

  std::int64_t cell_count(int degree) const;

  struct Cell {
    int degree = 0;
    std::array<int, 3> coord{0, 0, 0};
    int variant = 0;  // axis index for edges, axis-pair index for 3D faces

    friend bool operator==(const Cell& a, const Cell& b) {
      return a.degree == b.degree && a.coord == b.coord &&
             a.variant == b.variant;
    }
  };

  Cell cell(int degree, CellId id) const;
  CellId id_of(const Cell& c) const;

  int variant_count(int degree) const;
  /// Axes spanned by cells of the given degree/variant, ascending.
  std::vector<int> spanned_axes(int degree, int variant) const;

  /// Oriented boundary of one basis cell, appended to `out` as (id, sign).
  void boundary_of_cell(int degree, CellId id,
                        std::vector<std::pair<CellId, int>>& out) const;

  /// Same dimension, extent and periodicity (instance identity not required).
  bool same_structure(const CubicalComplex& other) const;

  /// Complex with every extent multiplied by `factor`, same periodicity.
  std::shared_ptr<const CubicalComplex> dilated(int factor) const;

 private:
  int axis_size(int axis) const { return axis < dim_ ? extent_[axis] : 1; }
  int coord_limit(int axis, bool spanned) const;
  bool coord_valid(const std::array<int, 3>& coord, int degree,
                   int variant) const;
  std::int64_t pack(const std::array<int, 3>& coord, int degree,
                    int variant) const;

  int dim_;
  std::array<int, 3> extent_;
  std::array<bool, 3> periodic_;

  struct DegreeTable {
    std::vector<Cell> cells;            // id -> cell
    std::vector<std::int64_t> inverse;  // packed (coord, variant) -> id
  };
  std::array<DegreeTable, 4> tables_;
};

using ComplexPtr = std::shared_ptr<const CubicalComplex>;

/// Convenience builder mirroring the grid constructor; validates inputs.
ComplexPtr build_complex(int dimension, const std::vector<int>& extent,
                         const std::vector<bool>& periodic = {});

/// Sparse real chain of fixed degree on a cubical complex. Zero coefficients
/// are never stored; iteration order is ascending cell id.
class Chain {
 public:
  Chain(ComplexPtr complex, int degree);

  const ComplexPtr& complex() const { return complex_; }
  int degree() const { return degree_; }

  double coefficient(CellId id) const;
  void set(CellId id, double value);
  void add(CellId id, double value);

  bool empty() const { return coef_.empty(); }
  std::size_t support_size() const { return coef_.size(); }
  const std::map<CellId, double>& coefficients() const { return coef_; }

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(double scalar);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator-(Chain a);
  friend bool operator==(const Chain& a, const Chain& b);

  /// Drops entries with |coefficient| <= eps.
  Chain pruned(double eps) const;
  /// True when every coefficient is within eps of an integer.
  bool near_integral(double eps) const;
  /// Rounds every coefficient to the nearest integer, dropping zeros.
  Chain rounded() const;

 private:
  ComplexPtr complex_;
  int degree_;
  std::map<CellId, double> coef_;
};

/// Real-valued cochain of fixed degree, stored densely over all cells of
/// that degree. The dual-variable counterpart of Chain.
class FormCochain {
 public:
  FormCochain(ComplexPtr complex, int degree);

  const ComplexPtr& complex() const { return complex_; }
  int degree() const { return degree_; }

  double value(CellId id) const { return values_[static_cast<std::size_t>(id)]; }
  void set(CellId id, double v) { values_[static_cast<std::size_t>(id)] = v; }
  const Eigen::VectorXd& values() const { return values_; }
  Eigen::VectorXd& values() { return values_; }

  /// <phi, c> = sum over cells of coefficient * value.
  double pair(const Chain& c) const;

 private:
  ComplexPtr complex_;
  int degree_;
  Eigen::VectorXd values_;
};

/// Set of top-dimensional cells (pixels/voxels).
class BinarySet {
 public:
  explicit BinarySet(ComplexPtr complex);
  BinarySet(ComplexPtr complex, std::set<CellId> cells);

  const ComplexPtr& complex() const { return complex_; }
  const std::set<CellId>& cells() const { return cells_; }
  bool contains(CellId id) const { return cells_.count(id) != 0; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  void insert(CellId id);
  void erase(CellId id) { cells_.erase(id); }

  friend bool operator==(const BinarySet& a, const BinarySet& b);

 private:
  ComplexPtr complex_;
  std::set<CellId> cells_;
};

BinarySet symmetric_difference(const BinarySet& a, const BinarySet& b);

/// Per-degree cell weights; defaults to the unit metric (edge length 1,
/// face area 1, cube volume 1). All weights must stay strictly positive.
struct MassWeights {
  std::array<double, 4> per_degree{1.0, 1.0, 1.0, 1.0};

  double weight(int degree, CellId) const {
    return per_degree[static_cast<std::size_t>(degree)];
  }
  void validate() const;
};

// Chain-complex operations.

/// Oriented boundary; degree drops by one. Rejects degree-0 input.
Chain boundary(const Chain& chain);

/// Discrete exterior derivative, the adjoint of boundary:
/// <coboundary(phi), c> = <phi, boundary(c)>. Rejects top-degree input.
FormCochain coboundary(const FormCochain& phi);

/// Weighted l1 norm of the coefficients.
double mass(const Chain& chain, const MassWeights& weights = MassWeights{});

/// Indicator chain of the set on top cells, all coefficients +1.
Chain indicator_chain(const BinarySet& set);

/// Oriented boundary current of the set (degree dimension-1).
Chain boundary_of_set(const BinarySet& set);

/// Pushforward under dilation by a positive integer factor. Each k-cell maps
/// to the factor^k cells tiling its dilated image, preserving coefficient and
/// orientation. If `target` is null a dilated complex is created.
Chain dilate_pushforward(const Chain& chain, int factor,
                         ComplexPtr target = nullptr);

/// Boundary operator of `degree`-cells as a sparse matrix:
/// rows are (degree-1)-cells, columns are degree-cells.
Eigen::SparseMatrix<double> boundary_matrix(const CubicalComplex& complex,
                                            int degree);

}  // namespace flatnorm
