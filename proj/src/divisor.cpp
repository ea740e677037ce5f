#include "tropsym/divisor.hpp"

#include <stdexcept>

#include "tropsym/errors.hpp"

namespace tropsym {

Divisor::Divisor(ModelPtr host) : host_(std::move(host)) {
  if (!host_) throw std::invalid_argument("divisor needs a host model");
}

Divisor Divisor::from_terms(
    ModelPtr host,
    const std::vector<std::pair<PointOnModel, std::int64_t>>& terms) {
  Divisor d(std::move(host));
  for (const auto& [p, c] : terms) d.add(p, c);
  return d;
}

Divisor Divisor::point(ModelPtr host, const PointOnModel& p,
                       std::int64_t coeff) {
  Divisor d(std::move(host));
  d.add(p, coeff);
  return d;
}

std::int64_t Divisor::coefficient(const PointOnModel& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t deg = 0;
  for (const auto& [p, c] : terms_) deg += c;
  return deg;
}

bool Divisor::is_effective() const {
  for (const auto& [p, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

bool Divisor::supported_on_vertices() const {
  for (const auto& [p, c] : terms_) {
    if (!p.is_vertex()) return false;
  }
  return true;
}

void Divisor::add(const PointOnModel& p, std::int64_t coeff) {
  PointOnModel q =
      p.is_vertex() ? p : host_->point_on_edge(p.edge(), p.position());
  host_->check_point(q);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(q, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Divisor Divisor::transported(const ModelPtr& target) const {
  if (target.get() == host_.get() || *target == *host_) {
    Divisor d(target);
    d.terms_ = terms_;
    return d;
  }
  if (!same_curve(*target, *host_)) {
    throw DomainError("divisor cannot be moved to a different curve");
  }
  Divisor d(target);
  for (const auto& [p, c] : terms_) {
    d.add(target->from_root(host_->to_root(p)), c);
  }
  return d;
}

Divisor Divisor::operator-() const {
  Divisor d(host_);
  for (const auto& [p, c] : terms_) d.terms_.emplace(p, -c);
  return d;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  // Any point of the curve is expressible on any of its models.
  const Divisor moved = other.transported(host_);
  for (const auto& [p, c] : moved.terms_) add(p, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) { return *this += -other; }

Divisor operator*(std::int64_t k, const Divisor& d) {
  Divisor out(d.host_);
  if (k == 0) return out;
  for (const auto& [p, c] : d.terms_) out.terms_.emplace(p, k * c);
  return out;
}

bool operator==(const Divisor& a, const Divisor& b) {
  if (a.host_.get() == b.host_.get() || *a.host_ == *b.host_) {
    return a.terms_ == b.terms_;
  }
  if (!same_curve(*a.host_, *b.host_)) return false;
  ModelPtr root = share(a.host_->root());
  return a.transported(root).terms_ == b.transported(root).terms_;
}

std::string Divisor::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*" + host_->describe(p);
  }
  return out;
}

Divisor canonical_divisor(const ModelPtr& m) {
  Divisor k(m);
  for (std::size_t v = 0; v < m->vertex_count(); ++v) {
    k.add(PointOnModel::at_vertex(v),
          m->valence(v) + 2 * m->vertex(v).weight - 2);
  }
  return k;
}

}  // namespace tropsym
