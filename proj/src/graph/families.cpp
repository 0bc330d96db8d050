#include "planted/families.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "planted/error.hpp"

namespace planted {

namespace {

__extension__ using Wide = unsigned __int128;

constexpr std::uint64_t kMaxFamilyEdges = 50'000'000;

struct KindName {
  FamilyKind kind;
  std::string_view name;
  std::size_t arity;
};

constexpr KindName kKinds[] = {
    {FamilyKind::Clique, "clique", 1},
    {FamilyKind::Path, "path", 1},
    {FamilyKind::Star, "star", 1},
    {FamilyKind::CompleteBipartite, "complete_bipartite", 2},
    {FamilyKind::RegularTree, "regular_tree", 2},
    {FamilyKind::Matching, "matching", 1},
    {FamilyKind::DisjointTriangles, "disjoint_triangles", 1},
    {FamilyKind::UnbalancedStars, "unbalanced_stars", 1},
};

const KindName& lookup(FamilyKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  fail(ErrorCode::InvalidSpec, "unknown family kind");
}

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    fail(ErrorCode::InvalidSpec, "bad size parameter in family spec '" + std::string(whole) + "'");
  }
  return value;
}

void require_size(std::uint64_t edges, const FamilySpec& spec) {
  if (edges > kMaxFamilyEdges) {
    fail(ErrorCode::InvalidSpec, to_string(spec) + " has too many edges to build");
  }
}

void add_star(std::vector<Edge>& edges, Vertex centre, Vertex first_leaf, std::uint64_t degree) {
  for (std::uint64_t i = 0; i < degree; ++i) edges.push_back({centre, static_cast<Vertex>(first_leaf + i)});
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    fail(ErrorCode::InvalidSpec, "family spec '" + std::string(text) + "' lacks ':'");
  }
  const std::string_view name = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);
  for (const auto& k : kKinds) {
    if (k.name != name) continue;
    FamilySpec spec{k.kind, 0, 0};
    const auto comma = args.find(',');
    if (k.arity == 1) {
      if (comma != std::string_view::npos) {
        fail(ErrorCode::InvalidSpec, "family '" + std::string(name) + "' takes one parameter");
      }
      spec.first = parse_count(args, text);
    } else {
      if (comma == std::string_view::npos) {
        fail(ErrorCode::InvalidSpec, "family '" + std::string(name) + "' takes two parameters");
      }
      spec.first = parse_count(args.substr(0, comma), text);
      spec.second = parse_count(args.substr(comma + 1), text);
    }
    return spec;
  }
  fail(ErrorCode::InvalidSpec, "unknown family '" + std::string(name) + "'");
}

std::string to_string(const FamilySpec& spec) {
  const auto& k = lookup(spec.kind);
  std::string out = std::string(k.name) + ":" + std::to_string(spec.first);
  if (k.arity == 2) out += "," + std::to_string(spec.second);
  return out;
}

std::uint64_t integer_root(std::uint64_t x, unsigned r) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "root order must be positive");
  auto fits = [&](std::uint64_t m) {
    Wide acc = 1;
    for (unsigned i = 0; i < r; ++i) {
      acc *= m;
      if (acc > x) return false;
    }
    return true;
  };
  std::uint64_t lo = 0;
  std::uint64_t hi = std::min<std::uint64_t>(x, std::uint64_t{1} << 32) + 1;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  return lo;
}

UnbalancedStarsShape unbalanced_stars_shape(std::uint64_t k) {
  if (k == 0) fail(ErrorCode::InvalidSpec, "unbalanced_stars needs k >= 1");
  UnbalancedStarsShape s;
  s.stars = k;
  s.small_degree = integer_root(k, 4);
  // ⌊k^{3/4}⌋ is the largest m with m^4 <= k^3.
  const auto k3 = static_cast<Wide>(k) * k * k;
  std::uint64_t lo = 0;
  std::uint64_t hi = k + 1;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    const auto m2 = static_cast<Wide>(mid) * mid;
    (m2 * m2 <= k3 ? lo : hi) = mid;
  }
  s.large_degree = lo;
  s.vertices = k * (s.small_degree + 1) + s.large_degree + 1;
  s.edges = k * s.small_degree + s.large_degree;
  s.max_degree = std::max(s.small_degree, s.large_degree);
  s.vertex_cover = k + 1;
  return s;
}

Graph make_family(const FamilySpec& spec) {
  const std::uint64_t a = spec.first;
  const std::uint64_t b = spec.second;
  const auto& k = lookup(spec.kind);
  if (a == 0 || (k.arity == 2 && b == 0)) {
    fail(ErrorCode::InvalidSpec, to_string(spec) + ": size parameters must be >= 1");
  }
  std::vector<Edge> edges;
  std::uint64_t n = 0;
  switch (spec.kind) {
    case FamilyKind::Clique: {
      if (a < 2) fail(ErrorCode::InvalidSpec, "clique:1 has an isolated vertex");
      require_size(a * (a - 1) / 2, spec);
      n = a;
      for (Vertex j = 1; j < a; ++j) {
        for (Vertex i = 0; i < j; ++i) edges.push_back({i, j});
      }
      break;
    }
    case FamilyKind::Path: {
      require_size(a, spec);
      n = a + 1;
      for (Vertex i = 0; i < a; ++i) edges.push_back({i, i + 1});
      break;
    }
    case FamilyKind::Star: {
      require_size(a, spec);
      n = a + 1;
      add_star(edges, 0, 1, a);
      break;
    }
    case FamilyKind::CompleteBipartite: {
      require_size(a * b, spec);
      n = a + b;
      for (Vertex i = 0; i < a; ++i) {
        for (Vertex j = 0; j < b; ++j) edges.push_back({i, static_cast<Vertex>(a + j)});
      }
      break;
    }
    case FamilyKind::RegularTree: {
      // Level sizes D, D(D-1), D(D-1)^2, ...
      std::uint64_t level = 1;
      std::uint64_t total = 1;
      for (std::uint64_t depth = 1; depth <= b; ++depth) {
        level *= depth == 1 ? a : a - 1;
        total += level;
        require_size(total, spec);
        if (level == 0) break;
      }
      n = total;
      Vertex next = 1;
      for (Vertex v = 0; next < n; ++v) {
        const std::uint64_t children = v == 0 ? a : a - 1;
        for (std::uint64_t c = 0; c < children && next < n; ++c) edges.push_back({v, next++});
      }
      break;
    }
    case FamilyKind::Matching: {
      require_size(a, spec);
      n = 2 * a;
      for (Vertex i = 0; i < a; ++i) edges.push_back({2 * i, 2 * i + 1});
      break;
    }
    case FamilyKind::DisjointTriangles: {
      require_size(3 * a, spec);
      n = 3 * a;
      for (Vertex i = 0; i < a; ++i) {
        edges.push_back({3 * i, 3 * i + 1});
        edges.push_back({3 * i, 3 * i + 2});
        edges.push_back({3 * i + 1, 3 * i + 2});
      }
      break;
    }
    case FamilyKind::UnbalancedStars: {
      const auto shape = unbalanced_stars_shape(a);
      require_size(shape.edges, spec);
      n = shape.vertices;
      Vertex base = 0;
      for (std::uint64_t s = 0; s < a; ++s) {
        add_star(edges, base, base + 1, shape.small_degree);
        base += static_cast<Vertex>(shape.small_degree + 1);
      }
      add_star(edges, base, base + 1, shape.large_degree);
      break;
    }
  }
  return Graph::from_canonical(n, std::move(edges));
}

}  // namespace planted
