#include "flatnorm/complex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace flatnorm {

namespace {

// Spanned-axis sets per (dimension, degree, variant). Variant order follows
// the axis labels: X < Y < Z for edges, XY < XZ < YZ for 3D faces.
std::vector<std::vector<int>> variant_axes(int dim, int degree) {
  if (degree == 0) return {{}};
  if (degree == 1) {
    std::vector<std::vector<int>> v;
    for (int a = 0; a < dim; ++a) v.push_back({a});
    return v;
  }
  if (degree == 2) {
    if (dim == 2) return {{0, 1}};
    return {{0, 1}, {0, 2}, {1, 2}};
  }
  return {{0, 1, 2}};
}

}  // namespace

CubicalComplex::CubicalComplex(int dimension, std::array<int, 3> extent,
                               std::array<bool, 3> periodic)
    : dim_(dimension), extent_(extent), periodic_(periodic) {
  if (dim_ != 2 && dim_ != 3)
    throw std::invalid_argument("CubicalComplex: dimension must be 2 or 3, got " +
                                std::to_string(dim_));
  for (int a = dim_; a < 3; ++a) {
    extent_[a] = 1;
    periodic_[a] = false;
  }
  for (int a = 0; a < dim_; ++a) {
    if (extent_[a] < 1)
      throw std::invalid_argument("CubicalComplex: extent must be >= 1 on axis " +
                                  std::to_string(a));
    if (periodic_[a] && extent_[a] < 3)
      throw std::invalid_argument(
          "CubicalComplex: periodic axes require extent >= 3 (axis " +
          std::to_string(a) + ")");
  }

  // Enumerate cells degree by degree: coordinates lexicographic, then variant.
  for (int degree = 0; degree <= dim_; ++degree) {
    DegreeTable& table = tables_[static_cast<std::size_t>(degree)];
    const int nv = variant_count(degree);
    const std::int64_t packed_size =
        static_cast<std::int64_t>(axis_size(0) + 1) * (axis_size(1) + 1) *
        (axis_size(2) + 1) * nv;
    table.inverse.assign(static_cast<std::size_t>(packed_size), -1);

    std::array<int, 3> c{0, 0, 0};
    for (c[0] = 0; c[0] <= axis_size(0); ++c[0])
      for (c[1] = 0; c[1] <= axis_size(1); ++c[1])
        for (c[2] = 0; c[2] <= axis_size(2); ++c[2])
          for (int v = 0; v < nv; ++v) {
            if (!coord_valid(c, degree, v)) continue;
            const CellId id = static_cast<CellId>(table.cells.size());
            table.cells.push_back(Cell{degree, c, v});
            table.inverse[static_cast<std::size_t>(pack(c, degree, v))] = id;
          }
  }
}

std::shared_ptr<const CubicalComplex> CubicalComplex::create(
    int dimension, std::array<int, 3> extent, std::array<bool, 3> periodic) {
  return std::make_shared<const CubicalComplex>(dimension, extent, periodic);
}

int CubicalComplex::coord_limit(int axis, bool spanned) const {
  const int n = axis_size(axis);
  if (axis < dim_ && periodic_[axis]) return n - 1;
  return spanned ? n - 1 : n;
}

bool CubicalComplex::coord_valid(const std::array<int, 3>& coord, int degree,
                                 int variant) const {
  const auto axes = variant_axes(dim_, degree)[static_cast<std::size_t>(variant)];
  for (int a = 0; a < 3; ++a) {
    const bool spanned = std::find(axes.begin(), axes.end(), a) != axes.end();
    if (a >= dim_) {
      if (coord[a] != 0) return false;
      continue;
    }
    if (coord[a] < 0 || coord[a] > coord_limit(a, spanned)) return false;
  }
  return true;
}

std::int64_t CubicalComplex::pack(const std::array<int, 3>& coord, int degree,
                                  int variant) const {
  const int nv = variant_count(degree);
  std::int64_t p = coord[0];
  p = p * (axis_size(1) + 1) + coord[1];
  p = p * (axis_size(2) + 1) + coord[2];
  return p * nv + variant;
}

std::int64_t CubicalComplex::cell_count(int degree) const {
  if (degree < 0 || degree > dim_) return 0;
  return static_cast<std::int64_t>(
      tables_[static_cast<std::size_t>(degree)].cells.size());
}

int CubicalComplex::variant_count(int degree) const {
  return static_cast<int>(variant_axes(dim_, degree).size());
}

std::vector<int> CubicalComplex::spanned_axes(int degree, int variant) const {
  return variant_axes(dim_, degree)[static_cast<std::size_t>(variant)];
}

CubicalComplex::Cell CubicalComplex::cell(int degree, CellId id) const {
  if (degree < 0 || degree > dim_)
    throw std::invalid_argument("cell: degree out of range");
  const auto& cells = tables_[static_cast<std::size_t>(degree)].cells;
  if (id < 0 || id >= static_cast<CellId>(cells.size()))
    throw std::invalid_argument("cell: id out of range");
  return cells[static_cast<std::size_t>(id)];
}

CellId CubicalComplex::id_of(const Cell& c) const {
  if (c.degree < 0 || c.degree > dim_)
    throw std::invalid_argument("id_of: degree out of range");
  std::array<int, 3> coord = c.coord;
  // Wrap periodic coordinates so callers may address cells modulo extent.
  for (int a = 0; a < dim_; ++a) {
    if (periodic_[a]) {
      const int n = extent_[a];
      coord[a] = ((coord[a] % n) + n) % n;
    }
  }
  if (!coord_valid(coord, c.degree, c.variant))
    throw std::invalid_argument("id_of: no such cell");
  const std::int64_t idx = pack(coord, c.degree, c.variant);
  const CellId id =
      tables_[static_cast<std::size_t>(c.degree)].inverse[static_cast<std::size_t>(idx)];
  if (id < 0) throw std::invalid_argument("id_of: no such cell");
  return id;
}

void CubicalComplex::boundary_of_cell(
    int degree, CellId id, std::vector<std::pair<CellId, int>>& out) const {
  if (degree < 1)
    throw std::invalid_argument("boundary_of_cell: degree must be >= 1");
  const Cell c = cell(degree, id);
  const auto axes = spanned_axes(degree, c.variant);

  // Interval product rule: removing the i-th spanned axis contributes the
  // far/near pair with sign (-1)^i.
  for (std::size_t i = 0; i < axes.size(); ++i) {
    std::vector<int> sub_axes;
    for (std::size_t j = 0; j < axes.size(); ++j)
      if (j != i) sub_axes.push_back(axes[j]);

    int sub_variant = 0;
    const auto all = variant_axes(dim_, degree - 1);
    for (std::size_t v = 0; v < all.size(); ++v)
      if (all[v] == sub_axes) sub_variant = static_cast<int>(v);

    const int sign = (i % 2 == 0) ? 1 : -1;
    Cell far{degree - 1, c.coord, sub_variant};
    far.coord[static_cast<std::size_t>(axes[i])] += 1;
    Cell near{degree - 1, c.coord, sub_variant};
    out.emplace_back(id_of(far), sign);
    out.emplace_back(id_of(near), -sign);
  }
}

bool CubicalComplex::same_structure(const CubicalComplex& other) const {
  return dim_ == other.dim_ && extent_ == other.extent_ &&
         periodic_ == other.periodic_;
}

std::shared_ptr<const CubicalComplex> CubicalComplex::dilated(int factor) const {
  if (factor < 1)
    throw std::invalid_argument("dilated: factor must be a positive integer");
  std::array<int, 3> ext = extent_;
  for (int a = 0; a < dim_; ++a) ext[a] *= factor;
  return create(dim_, ext, periodic_);
}

ComplexPtr build_complex(int dimension, const std::vector<int>& extent,
                         const std::vector<bool>& periodic) {
  if (dimension != 2 && dimension != 3)
    throw std::invalid_argument("build_complex: dimension must be 2 or 3");
  if (static_cast<int>(extent.size()) != dimension)
    throw std::invalid_argument("build_complex: extent size must equal dimension");
  if (!periodic.empty() && static_cast<int>(periodic.size()) != dimension)
    throw std::invalid_argument("build_complex: periodic size must equal dimension");
  std::array<int, 3> ext{1, 1, 1};
  std::array<bool, 3> per{false, false, false};
  for (int a = 0; a < dimension; ++a) {
    ext[static_cast<std::size_t>(a)] = extent[static_cast<std::size_t>(a)];
    if (!periodic.empty()) per[static_cast<std::size_t>(a)] = periodic[static_cast<std::size_t>(a)];
  }
  return CubicalComplex::create(dimension, ext, per);
}

// ---------------------------------------------------------------------------
// Chain

Chain::Chain(ComplexPtr complex, int degree)
    : complex_(std::move(complex)), degree_(degree) {
  if (!complex_) throw std::invalid_argument("Chain: null complex");
  if (degree_ < 0 || degree_ > complex_->dimension())
    throw std::invalid_argument("Chain: degree out of range");
}

double Chain::coefficient(CellId id) const {
  auto it = coef_.find(id);
  return it == coef_.end() ? 0.0 : it->second;
}

void Chain::set(CellId id, double value) {
  if (id < 0 || id >= complex_->cell_count(degree_))
    throw std::invalid_argument("Chain::set: cell id out of range");
  if (value == 0.0)
    coef_.erase(id);
  else
    coef_[id] = value;
}

void Chain::add(CellId id, double value) { set(id, coefficient(id) + value); }

Chain& Chain::operator+=(const Chain& other) {
  if (degree_ != other.degree_ || !complex_->same_structure(*other.complex_))
    throw std::invalid_argument("Chain: mismatched chains");
  for (const auto& [id, v] : other.coef_) add(id, v);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (degree_ != other.degree_ || !complex_->same_structure(*other.complex_))
    throw std::invalid_argument("Chain: mismatched chains");
  for (const auto& [id, v] : other.coef_) add(id, -v);
  return *this;
}

Chain& Chain::operator*=(double scalar) {
  if (scalar == 0.0) {
    coef_.clear();
    return *this;
  }
  for (auto& [id, v] : coef_) v *= scalar;
  return *this;
}

Chain operator-(Chain a) {
  a *= -1.0;
  return a;
}

bool operator==(const Chain& a, const Chain& b) {
  return a.degree_ == b.degree_ && a.complex_->same_structure(*b.complex_) &&
         a.coef_ == b.coef_;
}

Chain Chain::pruned(double eps) const {
  Chain out(complex_, degree_);
  for (const auto& [id, v] : coef_)
    if (std::abs(v) > eps) out.set(id, v);
  return out;
}

bool Chain::near_integral(double eps) const {
  for (const auto& [id, v] : coef_)
    if (std::abs(v - std::round(v)) > eps) return false;
  return true;
}

Chain Chain::rounded() const {
  Chain out(complex_, degree_);
  for (const auto& [id, v] : coef_) {
    const double r = std::round(v);
    if (r != 0.0) out.set(id, r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FormCochain

FormCochain::FormCochain(ComplexPtr complex, int degree)
    : complex_(std::move(complex)), degree_(degree) {
  if (!complex_) throw std::invalid_argument("FormCochain: null complex");
  if (degree_ < 0 || degree_ > complex_->dimension())
    throw std::invalid_argument("FormCochain: degree out of range");
  values_ = Eigen::VectorXd::Zero(complex_->cell_count(degree_));
}

double FormCochain::pair(const Chain& c) const {
  if (c.degree() != degree_ || !complex_->same_structure(*c.complex()))
    throw std::invalid_argument("FormCochain::pair: mismatched chain");
  double s = 0.0;
  for (const auto& [id, v] : c.coefficients())
    s += v * values_[static_cast<std::size_t>(id)];
  return s;
}

// ---------------------------------------------------------------------------
// BinarySet

BinarySet::BinarySet(ComplexPtr complex) : complex_(std::move(complex)) {
  if (!complex_) throw std::invalid_argument("BinarySet: null complex");
}

BinarySet::BinarySet(ComplexPtr complex, std::set<CellId> cells)
    : complex_(std::move(complex)), cells_(std::move(cells)) {
  if (!complex_) throw std::invalid_argument("BinarySet: null complex");
  const std::int64_t top = complex_->cell_count(complex_->dimension());
  for (CellId id : cells_)
    if (id < 0 || id >= top)
      throw std::invalid_argument("BinarySet: cell id out of range");
}

void BinarySet::insert(CellId id) {
  if (id < 0 || id >= complex_->cell_count(complex_->dimension()))
    throw std::invalid_argument("BinarySet::insert: cell id out of range");
  cells_.insert(id);
}

bool operator==(const BinarySet& a, const BinarySet& b) {
  return a.complex_->same_structure(*b.complex_) && a.cells_ == b.cells_;
}

BinarySet symmetric_difference(const BinarySet& a, const BinarySet& b) {
  if (!a.complex()->same_structure(*b.complex()))
    throw std::invalid_argument("symmetric_difference: mismatched complexes");
  std::set<CellId> out;
  std::set_symmetric_difference(a.cells().begin(), a.cells().end(),
                                b.cells().begin(), b.cells().end(),
                                std::inserter(out, out.begin()));
  return BinarySet(a.complex(), std::move(out));
}

void MassWeights::validate() const {
  for (double w : per_degree)
    if (!(w > 0.0))
      throw std::invalid_argument("MassWeights: weights must be strictly positive");
}

// ---------------------------------------------------------------------------
// Operations

Chain boundary(const Chain& chain) {
  if (chain.degree() < 1)
    throw std::invalid_argument("boundary: degree-0 chains have no boundary");
  Chain out(chain.complex(), chain.degree() - 1);
  std::vector<std::pair<CellId, int>> cells;
  for (const auto& [id, v] : chain.coefficients()) {
    cells.clear();
    chain.complex()->boundary_of_cell(chain.degree(), id, cells);
    for (const auto& [bid, sign] : cells) out.add(bid, sign * v);
  }
  return out;
}

FormCochain coboundary(const FormCochain& phi) {
  const auto& cx = *phi.complex();
  if (phi.degree() >= cx.dimension())
    throw std::invalid_argument("coboundary: top-degree cochains have no coboundary");
  FormCochain out(phi.complex(), phi.degree() + 1);
  std::vector<std::pair<CellId, int>> cells;
  const std::int64_t n = cx.cell_count(phi.degree() + 1);
  for (CellId f = 0; f < n; ++f) {
    cells.clear();
    cx.boundary_of_cell(phi.degree() + 1, f, cells);
    double s = 0.0;
    for (const auto& [eid, sign] : cells) s += sign * phi.value(eid);
    out.set(f, s);
  }
  return out;
}

double mass(const Chain& chain, const MassWeights& weights) {
  weights.validate();
  double m = 0.0;
  for (const auto& [id, v] : chain.coefficients())
    m += weights.weight(chain.degree(), id) * std::abs(v);
  return m;
}

Chain indicator_chain(const BinarySet& set) {
  Chain out(set.complex(), set.complex()->dimension());
  for (CellId id : set.cells()) out.set(id, 1.0);
  return out;
}

Chain boundary_of_set(const BinarySet& set) {
  if (set.empty())
    return Chain(set.complex(), set.complex()->dimension() - 1);
  return boundary(indicator_chain(set));
}

Chain dilate_pushforward(const Chain& chain, int factor, ComplexPtr target) {
  if (factor < 1)
    throw std::invalid_argument("dilate_pushforward: factor must be a positive integer");
  const auto& src = *chain.complex();
  if (!target) target = src.dilated(factor);
  ComplexPtr expected = src.dilated(factor);
  if (!target->same_structure(*expected))
    throw std::invalid_argument("dilate_pushforward: target extent mismatch");

  Chain out(target, chain.degree());
  for (const auto& [id, v] : chain.coefficients()) {
    const auto c = src.cell(chain.degree(), id);
    const auto axes = src.spanned_axes(chain.degree(), c.variant);

    // Tile the dilated image: offsets 0..factor-1 along each spanned axis.
    const std::size_t k = axes.size();
    std::vector<int> offset(k, 0);
    while (true) {
      CubicalComplex::Cell img{c.degree, c.coord, c.variant};
      for (int a = 0; a < 3; ++a) img.coord[static_cast<std::size_t>(a)] *= factor;
      for (std::size_t i = 0; i < k; ++i)
        img.coord[static_cast<std::size_t>(axes[i])] += offset[i];
      out.add(target->id_of(img), v);

      std::size_t i = 0;
      for (; i < k; ++i) {
        if (++offset[i] < factor) break;
        offset[i] = 0;
      }
      if (i == k) break;
    }
  }
  return out;
}

Eigen::SparseMatrix<double> boundary_matrix(const CubicalComplex& complex,
                                            int degree) {
  if (degree < 1 || degree > complex.dimension())
    throw std::invalid_argument("boundary_matrix: degree out of range");
  const std::int64_t rows = complex.cell_count(degree - 1);
  const std::int64_t cols = complex.cell_count(degree);
  Eigen::SparseMatrix<double> B(rows, cols);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(cols) * 2 * static_cast<std::size_t>(degree));
  std::vector<std::pair<CellId, int>> cells;
  for (CellId f = 0; f < cols; ++f) {
    cells.clear();
    complex.boundary_of_cell(degree, f, cells);
    for (const auto& [e, sign] : cells)
      trips.emplace_back(static_cast<int>(e), static_cast<int>(f),
                         static_cast<double>(sign));
  }
  B.setFromTriplets(trips.begin(), trips.end());
  return B;
}

}  // namespace flatnorm
