#include "ncop/ordinal.hpp"

#include <set>
#include <stdexcept>

namespace ncop {

Ordinal::Ordinal(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("ordinal must be nonempty");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw std::invalid_argument("ordinal labels must be distinct");
}

Ordinal Ordinal::canonical(int n) {
  std::vector<std::string> l;
  for (int k = 1; k <= n; ++k) l.push_back(std::to_string(k));
  return Ordinal(std::move(l));
}

int Ordinal::position(const std::string& label) const {
  for (int k = 0; k < size(); ++k)
    if (labels_[k] == label) return k;
  return -1;
}

std::vector<GapPair> gap_set(const Ordinal& I) {
  std::vector<GapPair> g;
  for (int k = 0; k + 1 < I.size(); ++k) g.push_back({I[k], I[k + 1]});
  return g;
}

static int check_insert(const Ordinal& I, const std::string& i, const Ordinal& J) {
  int p = I.position(i);
  if (p < 0) throw std::invalid_argument("label " + i + " not in ordinal");
  for (auto& l : J.labels())
    if (I.contains(l)) throw std::invalid_argument("label collision: " + l);
  return p;
}

Ordinal ordinal_insert(const Ordinal& I, const std::string& i, const Ordinal& J) {
  int p = check_insert(I, i, J);
  std::vector<std::string> out(I.labels().begin(), I.labels().begin() + p);
  out.insert(out.end(), J.labels().begin(), J.labels().end());
  out.insert(out.end(), I.labels().begin() + p + 1, I.labels().end());
  return Ordinal(std::move(out));
}

GapBijection gap_bijection(const Ordinal& I, const std::string& i, const Ordinal& J) {
  check_insert(I, i, J);
  const std::string& jmin = J.labels().front();
  const std::string& jmax = J.labels().back();
  GapBijection b;
  for (auto& g : gap_set(I)) {
    GapPair t = g;
    if (g.hi == i) t.hi = jmin;
    if (g.lo == i) t.lo = jmax;
    b.from_outer.emplace_back(g, t);
  }
  for (auto& g : gap_set(J)) b.from_inner.emplace_back(g, g);
  return b;
}

GapPair GapBijection::image_outer(const GapPair& g) const {
  for (auto& [s, t] : from_outer)
    if (s == g) return t;
  throw std::invalid_argument("gap not in outer ordinal");
}

GapPair GapBijection::image_inner(const GapPair& g) const {
  for (auto& [s, t] : from_inner)
    if (s == g) return t;
  throw std::invalid_argument("gap not in inner ordinal");
}

std::pair<bool, GapPair> GapBijection::preimage(const GapPair& g) const {
  for (auto& [s, t] : from_outer)
    if (t == g) return {false, s};
  for (auto& [s, t] : from_inner)
    if (t == g) return {true, s};
  throw std::invalid_argument("gap not in composite ordinal");
}

}  // namespace ncop
