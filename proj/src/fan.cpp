#include "tropsi/fan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tropsi {

bool Vector::is_zero() const {
  for (const Rat& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& other) {
  if (coords_.size() != other.coords_.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (coords_.size() != other.coords_.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Rat& scalar) {
  for (Rat& c : coords_) c *= scalar;
  return *this;
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

AmbientSpace::AmbientSpace(const WeightVector& w) : w_(w) {
  const int n = w.n();
  coord_lookup_.assign(static_cast<std::size_t>(n + 1) * (n + 1), -1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w.is_light(i) && w.is_light(j)) continue;
      coord_lookup_[i * (n + 1) + j] = static_cast<int>(coords_.size());
      coords_.emplace_back(i, j);
    }
  }
  // Basis of Im(phi_w): phi_w(e_k) has a 1 in every coordinate {i,j} with
  // k in {i,j}.
  linalg::Matrix basis(n, linalg::Row(coords_.size(), Rat(0)));
  for (int k = 1; k <= n; ++k) {
    for (std::size_t c = 0; c < coords_.size(); ++c) {
      if (coords_[c].first == k || coords_[c].second == k) basis[k - 1][c] = 1;
    }
  }
  reducers_ = std::move(basis);
  pivots_ = linalg::rref(reducers_);
  if (static_cast<int>(pivots_.size()) != n) {
    throw std::logic_error("phi_w is not injective; weight vector out of scope");
  }
}

int AmbientSpace::coord_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  const int n = w_.n();
  if (i < 1 || j > n || i == j) return -1;
  return coord_lookup_[i * (n + 1) + j];
}

Vector AmbientSpace::reduce(std::vector<Rat> raw) const {
  if (raw.size() != coords_.size()) throw std::invalid_argument("reduce: wrong coordinate count");
  for (std::size_t r = 0; r < reducers_.size(); ++r) {
    const Rat factor = raw[pivots_[r]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < raw.size(); ++c) raw[c] -= factor * reducers_[r][c];
  }
  return Vector(std::move(raw));
}

std::vector<Rat> AmbientSpace::phi(const std::vector<Rat>& point) const {
  if (point.size() != static_cast<std::size_t>(w_.n())) {
    throw std::invalid_argument("phi: expected one value per mark");
  }
  std::vector<Rat> out(coords_.size(), Rat(0));
  for (std::size_t c = 0; c < coords_.size(); ++c) {
    out[c] = point[coords_[c].first - 1] + point[coords_[c].second - 1];
  }
  return out;
}

std::vector<Rat> AmbientSpace::raw_ray_vector(Split I) const {
  std::vector<Rat> raw(coords_.size(), Rat(0));
  for (std::size_t c = 0; c < coords_.size(); ++c) {
    if (I.separates(coords_[c].first, coords_[c].second)) raw[c] = 1;
  }
  return raw;
}

Vector AmbientSpace::ray_vector(Split I) const { return reduce(raw_ray_vector(I)); }

void Cycle::add(const CombinatorialType& t, const BigInt& weight) {
  if (weight == 0) return;
  auto [it, inserted] = entries.emplace(t, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second == 0) entries.erase(it);
  }
}

Cycle Cycle::scaled(const BigInt& factor) const {
  Cycle out(w, dim);
  if (factor == 0) return out;
  for (const auto& [t, weight] : entries) out.entries.emplace(t, weight * factor);
  return out;
}

Cycle full_fan(const WeightVector& w) {
  Cycle out(w, w.n() - 3);
  for (const CombinatorialType& t : enumerate_types(w, 0)) out.entries.emplace(t, 1);
  return out;
}

std::map<CombinatorialType, std::vector<std::pair<CombinatorialType, Split>>> codim1_faces(
    const Cycle& z) {
  std::map<CombinatorialType, std::vector<std::pair<CombinatorialType, Split>>> faces;
  for (const auto& [t, weight] : z.entries) {
    for (const Split& s : t.splits()) {
      faces[contract_edge(t, s)].emplace_back(t, s);
    }
  }
  return faces;
}

Vector embed_point(const CombinatorialType& t, const std::map<Split, Rat>& lengths,
                   const AmbientSpace& space) {
  std::vector<Rat> raw(space.coord_count(), Rat(0));
  for (const auto& [split, len] : lengths) {
    if (len < 0) throw std::invalid_argument("embed_point: negative edge length");
    if (!t.has_split(split)) throw std::invalid_argument("embed_point: length on a missing split");
    const std::vector<Rat> ray = space.raw_ray_vector(split);
    for (std::size_t c = 0; c < raw.size(); ++c) raw[c] += len * ray[c];
  }
  return space.reduce(std::move(raw));
}

std::pair<Split, Vector> primitive_generator(const CombinatorialType& sigma,
                                             const CombinatorialType& tau,
                                             const AmbientSpace& space) {
  if (sigma.n() != tau.n() || sigma.edge_count() != tau.edge_count() + 1) {
    throw std::invalid_argument("primitive_generator: sigma must refine tau by one split");
  }
  std::optional<Split> extra;
  for (const Split& s : sigma.splits()) {
    if (!tau.has_split(s)) {
      if (extra) throw std::invalid_argument("primitive_generator: containment violated");
      extra = s;
    }
  }
  if (!extra) throw std::invalid_argument("primitive_generator: containment violated");
  return {*extra, space.ray_vector(*extra)};
}

BalanceReport check_balancing(const Cycle& z, const AmbientSpace& space) {
  BalanceReport report;
  for (const auto& [face, stars] : codim1_faces(z)) {
    std::vector<Rat> sum(space.coord_count(), Rat(0));
    for (const auto& [cone, extra] : stars) {
      const BigInt& weight = z.entries.at(cone);
      const std::vector<Rat> ray = space.raw_ray_vector(extra);
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += Rat(weight) * ray[c];
    }
    const Vector reduced = space.reduce(std::move(sum));
    linalg::Matrix columns;
    for (const Split& s : face.splits()) columns.push_back(space.ray_vector(s).coords());
    const auto solution = linalg::solve_columns(columns, reduced.coords());
    if (!solution) {
      report.balanced = false;
      report.violation = face;
      report.detail = "balancing fails at face " + face.to_string();
      return report;
    }
  }
  return report;
}

CombinatorialType pushforward_type(const CombinatorialType& t, const WeightVector& w) {
  if (t.n() != w.n()) throw std::invalid_argument("pushforward: mark count mismatch");
  const int n = w.n();
  std::vector<Split> kept;
  for (const Split& s : t.splits()) {
    if (w.weight_exceeds_one(s.side()) && w.weight_exceeds_one(s.complement(n))) kept.push_back(s);
  }
  return CombinatorialType(n, std::move(kept));
}

Cycle pushforward_cycle(const Cycle& z, const WeightVector& w) {
  Cycle out(w, z.dim);
  for (const auto& [t, weight] : z.entries) {
    const CombinatorialType image = pushforward_type(t, w);
    if (image.edge_count() != t.edge_count()) continue;  // cone is contracted
    out.add(image, weight);
  }
  return out;
}

}  // namespace tropsi
