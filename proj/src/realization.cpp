#include "anglerig/realization.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "anglerig/rng.hpp"

namespace anglerig {

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  Rng rng(master ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xd1b54a32d192ed03ULL));
  return rng.next();
}

Realization Realization::rotated90() const {
  Realization out;
  out.pts.reserve(pts.size());
  for (const auto& [px, py] : pts) out.pts.emplace_back(-py, px);
  return out;
}

Realization random_realization(int n, std::uint64_t seed, long long bound) {
  if (bound < static_cast<long long>(n) * n)
    throw std::invalid_argument("coordinate bound must be at least n^2");
  Rng rng(seed);
  std::set<long long> taken;
  std::vector<long long> values;
  values.reserve(2 * n);
  while (static_cast<int>(values.size()) < 2 * n) {
    const long long v = rng.symmetric(bound);
    if (taken.insert(v).second) values.push_back(v);
  }
  Realization p;
  p.pts.reserve(n);
  for (int i = 0; i < n; ++i)
    p.pts.emplace_back(Rat(static_cast<long>(values[2 * i])), Rat(static_cast<long>(values[2 * i + 1])));
  return p;
}

FloatRealization to_float(const Realization& p) {
  FloatRealization out;
  out.pts.reserve(p.pts.size());
  for (const auto& [x, y] : p.pts) out.pts.emplace_back(x.get_d(), y.get_d());
  return out;
}

Realization parse_realization(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<Rat, Rat>> pts(n, {Rat(0), Rat(0)});
  std::vector<bool> seen(n + 1, false);
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int v;
    std::string sx, sy;
    if (!(ls >> v)) continue;
    if (!(ls >> sx >> sy)) throw std::invalid_argument("realization line must be 'v x y'");
    if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " assigned twice");
    seen[v] = true;
    pts[v - 1] = {rat_from_string(sx), rat_from_string(sy)};
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " has no point");
  return Realization{std::move(pts)};
}

std::string format_realization(const Realization& p) {
  std::ostringstream out;
  for (int v = 1; v <= p.n(); ++v)
    out << v << ' ' << rat_to_string(p.x(v)) << ' ' << rat_to_string(p.y(v)) << '\n';
  return out.str();
}

FloatRealization parse_float_realization(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<double, double>> pts(n, {0.0, 0.0});
  std::vector<bool> seen(n + 1, false);
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int v;
    std::string sx, sy;
    if (!(ls >> v)) continue;
    if (!(ls >> sx >> sy)) throw std::invalid_argument("realization line must be 'v x y'");
    if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    seen[v] = true;
    const auto parse = [](const std::string& s) {
      if (s.find('/') != std::string::npos) return rat_from_string(s).get_d();
      return std::stod(s);
    };
    pts[v - 1] = {parse(sx), parse(sy)};
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " has no point");
  return FloatRealization{std::move(pts)};
}

} // namespace anglerig
