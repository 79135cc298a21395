#include "hso/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "hso/error.hpp"

namespace hso {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidParameters, what); }

void require(bool ok, const FamilySpec& spec, const char* rule) {
  if (!ok) invalid(std::string(to_string(spec.kind)) + " n=" + std::to_string(spec.n) + ": " + rule);
}

// Pendant attachment: `count` new leaves on `hub`, starting at vertex `next`.
int attach_pendants(std::vector<Edge>& edges, Vertex hub, int count, int next) {
  for (int i = 0; i < count; ++i) edges.emplace_back(hub, next++);
  return next;
}

double r0(int a1, int a2, int a3) {
  auto pend = [](int a) { return a * std::sqrt(double(a + 2) * (a + 2) + 1.0); };
  auto cyc = [](int x, int y) {
    const double r = double(x + 2) / double(y + 2);
    return std::sqrt(r * r + 1.0);
  };
  return pend(a1) + pend(a2) + pend(a3) + cyc(a1, a2) + cyc(a2, a3) + cyc(a1, a3);
}

// n^2 - 2n + c, i.e. (n-1)^2 + (c-1).
double q(int n, int c) { return double(n) * n - 2.0 * n + c; }

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return "path";
    case FamilyKind::Star: return "star";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::TrianglePendants: return "tripend";
    case FamilyKind::SPrime: return "sprime";
    case FamilyKind::CPrimeJoined: return "cprime";
    case FamilyKind::CDoublePrimeMerged: return "cdprime";
    case FamilyKind::C33: return "c33";
    case FamilyKind::SDoublePrime: return "sdprime";
  }
  return "unknown";
}

std::string FamilySpec::to_string() const {
  std::string s(hso::to_string(kind));
  s.push_back(':');
  if (params.empty()) return s + std::to_string(n);
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(params[i]);
  }
  return s;
}

void validate(const FamilySpec& spec) {
  const int n = spec.n;
  const auto& p = spec.params;
  require(n >= 1 && n <= kMaxOrder, spec, "order outside [1, 62]");
  switch (spec.kind) {
    case FamilyKind::Path:
    case FamilyKind::Star:
    case FamilyKind::Complete:
      require(p.empty(), spec, "takes no parameters");
      break;
    case FamilyKind::Cycle:
    case FamilyKind::SPrime:
      require(p.empty(), spec, "takes no parameters");
      require(n >= 3, spec, "needs n >= 3");
      break;
    case FamilyKind::C33:
      require(p.empty(), spec, "takes no parameters");
      require(n >= 5, spec, "needs n >= 5");
      break;
    case FamilyKind::SDoublePrime:
      require(p.empty(), spec, "takes no parameters");
      require(n >= 4, spec, "needs n >= 4");
      break;
    case FamilyKind::TrianglePendants:
      require(p.size() == 3, spec, "needs (a1, a2, a3)");
      require(p[0] >= p[1] && p[1] >= p[2] && p[2] >= 0, spec, "needs a1 >= a2 >= a3 >= 0");
      require(p[0] + p[1] + p[2] == n - 3, spec, "needs a1 + a2 + a3 = n - 3");
      break;
    case FamilyKind::CPrimeJoined:
      require(p.size() == 2, spec, "needs (p, q)");
      require(p[0] >= 3 && p[1] >= 3, spec, "needs p, q >= 3");
      require(p[0] + p[1] == n, spec, "needs p + q = n");
      break;
    case FamilyKind::CDoublePrimeMerged:
      require(p.size() == 2, spec, "needs (p, q)");
      require(p[0] >= 3 && p[1] >= 3, spec, "needs p, q >= 3");
      require(p[0] + p[1] - 2 == n, spec, "needs p + q - 2 = n");
      break;
  }
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) invalid("family spec '" + std::string(text) + "' lacks ':'");
  const std::string_view name = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  std::vector<int> ints;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      invalid("bad integer '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    ints.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }

  auto single = [&](FamilyKind k) {
    if (ints.size() != 1) invalid(std::string(name) + " takes one integer");
    return FamilySpec{k, ints[0], {}};
  };
  FamilySpec spec;
  if (name == "path") spec = single(FamilyKind::Path);
  else if (name == "star") spec = single(FamilyKind::Star);
  else if (name == "cycle") spec = single(FamilyKind::Cycle);
  else if (name == "complete") spec = single(FamilyKind::Complete);
  else if (name == "sprime") spec = single(FamilyKind::SPrime);
  else if (name == "c33") spec = single(FamilyKind::C33);
  else if (name == "sdprime") spec = single(FamilyKind::SDoublePrime);
  else if (name == "tripend") {
    if (ints.size() != 3) invalid("tripend takes A1,A2,A3");
    spec = FamilySpec::triangle_pendants(ints[0], ints[1], ints[2]);
  } else if (name == "cprime") {
    if (ints.size() != 2) invalid("cprime takes P,Q");
    spec = FamilySpec::c_prime(ints[0], ints[1]);
  } else if (name == "cdprime") {
    if (ints.size() != 2) invalid("cdprime takes P,Q");
    spec = FamilySpec::c_double_prime(ints[0], ints[1]);
  } else {
    invalid("unknown family '" + std::string(name) + "'");
  }
  validate(spec);
  return spec;
}

Graph build(const FamilySpec& spec) {
  validate(spec);
  const int n = spec.n;
  std::vector<Edge> e;
  switch (spec.kind) {
    case FamilyKind::Path:
      for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
      break;
    case FamilyKind::Star:
      attach_pendants(e, 0, n - 1, 1);
      break;
    case FamilyKind::Cycle:
      for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
      break;
    case FamilyKind::Complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
      break;
    case FamilyKind::TrianglePendants:
    case FamilyKind::SPrime: {
      const std::vector<int> a =
          spec.kind == FamilyKind::SPrime ? std::vector<int>{n - 3, 0, 0} : spec.params;
      e = {{0, 1}, {1, 2}, {0, 2}};
      int next = 3;
      for (int i = 0; i < 3; ++i) next = attach_pendants(e, i, a[i], next);
      break;
    }
    case FamilyKind::CPrimeJoined: {
      const int p = spec.params[0];
      const int q = spec.params[1];
      for (int v = 0; v < p; ++v) e.emplace_back(v, (v + 1) % p);
      for (int v = 0; v < q; ++v) e.emplace_back(p + v, p + (v + 1) % q);
      e.emplace_back(0, p);
      break;
    }
    case FamilyKind::CDoublePrimeMerged: {
      const int p = spec.params[0];
      const int q = spec.params[1];
      for (int v = 0; v < p; ++v) e.emplace_back(v, (v + 1) % p);
      // Second cycle: 1 - p - p+1 - ... - (n-1) - 0, closed by the shared edge 0-1.
      int prev = 1;
      for (int v = p; v < p + q - 2; ++v) {
        e.emplace_back(prev, v);
        prev = v;
      }
      e.emplace_back(prev, 0);
      break;
    }
    case FamilyKind::C33:
      e = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}};
      attach_pendants(e, 0, n - 5, 5);
      break;
    case FamilyKind::SDoublePrime:
      // K4 minus the edge 2-3; vertices 0 and 1 have degree 3.
      e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
      attach_pendants(e, 0, n - 4, 4);
      break;
  }
  return Graph::from_edge_list(n, e);
}

double closed_form_hso(const FamilySpec& spec) {
  validate(spec);
  const int n = spec.n;
  const double r2 = std::sqrt(2.0);
  switch (spec.kind) {
    case FamilyKind::Path:
      if (n == 1) return 0.0;
      if (n == 2) return r2;
      return 2.0 * std::sqrt(5.0) + (n - 3) * r2;
    case FamilyKind::Star:
      return (n - 1) * std::sqrt(q(n, 2));
    case FamilyKind::Cycle:
      return r2 * n;
    case FamilyKind::Complete:
      return r2 * (double(n) * (n - 1) / 2.0);
    case FamilyKind::TrianglePendants:
      return r0(spec.params[0], spec.params[1], spec.params[2]);
    case FamilyKind::SPrime:
      return (n - 3) * std::sqrt(q(n, 2)) + std::sqrt(q(n, 5)) + r2;
    case FamilyKind::CPrimeJoined:
    case FamilyKind::CDoublePrimeMerged:
      return (n - 3) * r2 + 2.0 * std::sqrt(13.0);
    case FamilyKind::C33:
      return (n - 5) * std::sqrt(q(n, 2)) + 2.0 * std::sqrt(q(n, 5)) + 2.0 * r2;
    case FamilyKind::SDoublePrime:
      return (n - 4) * std::sqrt(q(n, 2)) + std::sqrt(q(n, 5)) + std::sqrt(q(n, 10)) / 3.0 +
             std::sqrt(13.0);
  }
  return 0.0;
}

std::vector<FamilySpec> family_members(FamilyKind kind, int n) {
  std::vector<FamilySpec> out;
  if (n < 1 || n > kMaxOrder) return out;
  switch (kind) {
    case FamilyKind::TrianglePendants:
      for (int a1 = n - 3; a1 >= 0; --a1)
        for (int a2 = std::min(a1, n - 3 - a1); a2 >= 0; --a2) {
          const int a3 = n - 3 - a1 - a2;
          if (a3 >= 0 && a3 <= a2) out.push_back(FamilySpec::triangle_pendants(a1, a2, a3));
        }
      return out;
    case FamilyKind::CPrimeJoined:
      for (int p = 3; p <= n - p; ++p) out.push_back(FamilySpec::c_prime(p, n - p));
      return out;
    case FamilyKind::CDoublePrimeMerged:
      for (int p = 3; p <= n + 2 - p; ++p) out.push_back(FamilySpec::c_double_prime(p, n + 2 - p));
      return out;
    default: {
      FamilySpec spec{kind, n, {}};
      try {
        validate(spec);
      } catch (const Error&) {
        return out;
      }
      out.push_back(spec);
      return out;
    }
  }
}

std::string_view to_string(BoundTheorem t) {
  switch (t) {
    case BoundTheorem::TreeBounds: return "tree-bounds";
    case BoundTheorem::GeneralLower: return "general-lower";
    case BoundTheorem::UnicyclicLower: return "unicyclic-lower";
    case BoundTheorem::UnicyclicUpper: return "unicyclic-upper";
    case BoundTheorem::UnicyclicBounds: return "unicyclic-bounds";
    case BoundTheorem::BicyclicLower: return "bicyclic-lower";
    case BoundTheorem::BicyclicUpper: return "bicyclic-upper";
  }
  return "unknown";
}

BoundTheorem parse_bound_theorem(std::string_view name) {
  for (auto t : {BoundTheorem::TreeBounds, BoundTheorem::GeneralLower, BoundTheorem::UnicyclicLower,
                 BoundTheorem::UnicyclicUpper, BoundTheorem::UnicyclicBounds,
                 BoundTheorem::BicyclicLower, BoundTheorem::BicyclicUpper}) {
    if (to_string(t) == name) return t;
  }
  throw Error(ErrorCode::UnknownTheorem, "'" + std::string(name) + "'");
}

BoundPair closed_form_bound(BoundTheorem theorem, int n) {
  auto need = [&](int lo) {
    if (n < lo || n > kMaxOrder) {
      throw Error(ErrorCode::OrderOutOfRange, std::string(to_string(theorem)) + " needs n >= " +
                                                  std::to_string(lo) + ", got " + std::to_string(n));
    }
  };
  const double r2 = std::sqrt(2.0);
  const double r13 = std::sqrt(13.0);
  switch (theorem) {
    case BoundTheorem::TreeBounds:
      need(2);
      // K2 is the only tree of order 2; the general lower formula assumes n >= 3.
      if (n == 2) return {r2, r2};
      return {2.0 * std::sqrt(5.0) + (n - 3) * r2, (n - 1) * std::sqrt(q(n, 2))};
    case BoundTheorem::GeneralLower:
    case BoundTheorem::UnicyclicLower:
      need(3);
      return {r2 * n, std::nullopt};
    case BoundTheorem::UnicyclicUpper:
      need(3);
      return {std::nullopt, (n - 3) * std::sqrt(q(n, 2)) + std::sqrt(q(n, 5)) + r2};
    case BoundTheorem::UnicyclicBounds:
      need(3);
      return {r2 * n, (n - 3) * std::sqrt(q(n, 2)) + std::sqrt(q(n, 5)) + r2};
    case BoundTheorem::BicyclicLower:
      need(4);
      return {(n - 3) * r2 + 2.0 * r13, std::nullopt};
    case BoundTheorem::BicyclicUpper:
      need(4);
      return {std::nullopt, (n - 4) * std::sqrt(q(n, 2)) + std::sqrt(q(n, 5)) +
                                std::sqrt(q(n, 10)) / 3.0 + r13};
  }
  throw Error(ErrorCode::UnknownTheorem, "unhandled theorem");
}

}  // namespace hso
