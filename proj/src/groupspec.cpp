#include "genwait/groupspec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "genwait/errors.hpp"

namespace genwait {

namespace {

constexpr std::uint32_t kMaxDegree = 2000;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  std::uint32_t integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected an integer", pos);
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) throw ParseError("integer out of range", pos);
      ++pos;
    }
    return static_cast<std::uint32_t>(v);
  }
};

GroupSpec::Term parse_term(Cursor& c) {
  GroupSpec::Term t;
  c.skip_ws();
  std::size_t start = c.pos;
  if (c.s.compare(c.pos, 5, "perm(") == 0) {
    c.pos += 5;
    t.kind = GroupSpec::Kind::Raw;
    t.raw_degree = c.integer();
    if (t.raw_degree < 1 || t.raw_degree > kMaxDegree)
      throw ParseError("degree out of range", start);
    c.expect(')');
    c.expect('{');
    while (c.peek() != '}') {
      std::vector<std::vector<std::uint32_t>> gen;
      while (c.peek() == '(') {
        c.expect('(');
        std::vector<std::uint32_t> cyc;
        while (c.peek() != ')') {
          std::uint32_t pt = c.integer();
          if (pt < 1 || pt > t.raw_degree)
            throw ParseError("cycle point out of range", c.pos);
          if (std::find(cyc.begin(), cyc.end(), pt) != cyc.end())
            throw ParseError("repeated point in cycle", c.pos);
          cyc.push_back(pt);
        }
        c.expect(')');
        if (cyc.size() > 1) gen.push_back(std::move(cyc));
      }
      t.raw_cycles.push_back(std::move(gen));
      if (!c.accept(',')) break;
    }
    c.expect('}');
    return t;
  }
  if (c.s.compare(c.pos, 3, "GD(") == 0) {
    c.pos += 3;
    t.kind = GroupSpec::Kind::SemidirectInvolution;
    t.gd_rank = c.integer();
    if (t.gd_rank < 1) throw ParseError("rank must be >= 1", start);
    c.expect(';');
    do {
      std::uint32_t p = c.integer();
      if (!is_prime(p) || p == 2) throw ParseError("GD needs odd primes", c.pos);
      if (std::find(t.gd_primes.begin(), t.gd_primes.end(), p) != t.gd_primes.end())
        throw ParseError("GD primes must be distinct", c.pos);
      t.gd_primes.push_back(p);
    } while (c.accept(','));
    c.expect(')');
    return t;
  }
  if (c.s.compare(c.pos, 2, "E(") == 0) {
    c.pos += 2;
    t.kind = GroupSpec::Kind::Elementary;
    t.prime = c.integer();
    if (!is_prime(t.prime)) throw ParseError("E needs a prime", c.pos);
    c.expect(',');
    t.rank = c.integer();
    if (t.rank < 1) throw ParseError("E needs rank >= 1", c.pos);
    c.expect(')');
    return t;
  }
  if (c.s.compare(c.pos, 2, "Q8") == 0) {
    c.pos += 2;
    t.kind = GroupSpec::Kind::Named;
    t.family = 'Q';
    t.n = 8;
    return t;
  }
  char f = c.peek();
  if (f == 'S' || f == 'A' || f == 'C' || f == 'D') {
    ++c.pos;
    t.kind = GroupSpec::Kind::Named;
    t.family = f;
    t.n = c.integer();
    if (t.n < 1 || t.n > kMaxDegree) throw ParseError("parameter out of range", start);
    if (f == 'D' && t.n < 3) throw ParseError("D n requires n >= 3", start);
    return t;
  }
  throw ParseError("expected a group term", c.pos);
}

Perm cycle_perm(Point degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(degree);
  for (Point i = 0; i < degree; ++i) im[i] = i;
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) im[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return Perm(std::move(im));
}

std::vector<Perm> term_generators(const GroupSpec::Term& t, Point degree, Point offset) {
  auto cyc = [&](std::vector<std::vector<Point>> cycles) {
    for (auto& c : cycles)
      for (auto& x : c) x += offset;
    return cycle_perm(degree, cycles);
  };
  std::vector<Perm> gens;
  switch (t.kind) {
    case GroupSpec::Kind::Named: {
      if (t.family == 'C') {
        std::vector<Point> c(t.n);
        for (Point i = 0; i < t.n; ++i) c[i] = i;
        if (t.n >= 2) gens.push_back(cyc({c}));
      } else if (t.family == 'S') {
        if (t.n >= 2) {
          gens.push_back(cyc({{0, 1}}));
          std::vector<Point> c(t.n);
          for (Point i = 0; i < t.n; ++i) c[i] = i;
          if (t.n >= 3) gens.push_back(cyc({c}));
        }
      } else if (t.family == 'A') {
        if (t.n >= 3) {
          gens.push_back(cyc({{0, 1, 2}}));
          if (t.n > 3) {
            std::vector<Point> c;
            if (t.n % 2 == 1) {
              for (Point i = 0; i < t.n; ++i) c.push_back(i);
            } else {
              for (Point i = 1; i < t.n; ++i) c.push_back(i);
            }
            gens.push_back(cyc({c}));
          }
        }
      } else if (t.family == 'D') {
        std::vector<Point> rot(t.n);
        for (Point i = 0; i < t.n; ++i) rot[i] = i;
        gens.push_back(cyc({rot}));
        std::vector<std::vector<Point>> refl;
        for (Point i = 1; 2 * i < t.n; ++i)
          if (i != t.n - i) refl.push_back({i, t.n - i});
        gens.push_back(cyc(refl));
      } else if (t.family == 'Q') {
        // unit quaternions on the points 1,-1,i,-i,j,-j,k,-k
        gens.push_back(cyc({{0, 2, 1, 3}, {4, 6, 5, 7}}));
        gens.push_back(cyc({{0, 4, 1, 5}, {2, 7, 3, 6}}));
      }
      break;
    }
    case GroupSpec::Kind::Elementary: {
      for (Point r = 0; r < t.rank; ++r) {
        std::vector<Point> c(t.prime);
        for (Point i = 0; i < t.prime; ++i) c[i] = r * t.prime + i;
        gens.push_back(cyc({c}));
      }
      break;
    }
    case GroupSpec::Kind::SemidirectInvolution: {
      Point local = 0;
      std::vector<std::vector<Point>> inv_cycles;
      for (std::uint32_t p : t.gd_primes) {
        for (Point r = 0; r < t.gd_rank; ++r) {
          std::vector<Point> c(p);
          for (Point i = 0; i < p; ++i) c[i] = local + i;
          gens.push_back(cyc({c}));
          // inversion of a p-cycle: fix the first point, swap i and p-i
          for (Point i = 1; 2 * i < p; ++i) inv_cycles.push_back({local + i, local + p - i});
          local += p;
        }
      }
      gens.push_back(cyc(inv_cycles));
      break;
    }
    case GroupSpec::Kind::Raw: {
      for (const auto& gcycles : t.raw_cycles) {
        std::vector<std::vector<Point>> cs;
        for (const auto& cyc0 : gcycles) {
          std::vector<Point> c;
          for (std::uint32_t pt : cyc0) c.push_back(pt - 1);  // 1-indexed input
          cs.push_back(std::move(c));
        }
        gens.push_back(cyc(cs));  // overlapping cycles fail Perm validation
      }
      break;
    }
  }
  return gens;
}

Point term_degree(const GroupSpec::Term& t) {
  switch (t.kind) {
    case GroupSpec::Kind::Named:
      return t.n;
    case GroupSpec::Kind::Elementary:
      return t.prime * t.rank;
    case GroupSpec::Kind::SemidirectInvolution: {
      Point d = 0;
      for (std::uint32_t p : t.gd_primes) d += t.gd_rank * p;
      return d;
    }
    case GroupSpec::Kind::Raw:
      return t.raw_degree;
  }
  return 0;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  Cursor c{text};
  GroupSpec spec;
  spec.terms_.push_back(parse_term(c));
  while (c.accept('*')) spec.terms_.push_back(parse_term(c));
  if (!c.eof()) throw ParseError("unexpected trailing input", c.pos);
  Point total = 0;
  for (const Term& t : spec.terms_) total += term_degree(t);
  if (total > kMaxDegree) throw ParseError("total degree out of range", 0);
  return spec;
}

std::string GroupSpec::print() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << '*';
    const Term& t = terms_[i];
    switch (t.kind) {
      case Kind::Named:
        if (t.family == 'Q')
          os << "Q8";
        else
          os << t.family << t.n;
        break;
      case Kind::Elementary:
        os << "E(" << t.prime << ',' << t.rank << ')';
        break;
      case Kind::SemidirectInvolution: {
        os << "GD(" << t.gd_rank << ';';
        for (std::size_t j = 0; j < t.gd_primes.size(); ++j) {
          if (j) os << ',';
          os << t.gd_primes[j];
        }
        os << ')';
        break;
      }
      case Kind::Raw: {
        os << "perm(" << t.raw_degree << "){";
        for (std::size_t g = 0; g < t.raw_cycles.size(); ++g) {
          if (g) os << ',';
          for (const auto& cyc : t.raw_cycles[g]) {
            os << '(';
            for (std::size_t j = 0; j < cyc.size(); ++j) {
              if (j) os << ' ';
              os << cyc[j];
            }
            os << ')';
          }
          if (t.raw_cycles[g].empty()) os << "()";
        }
        os << '}';
        break;
      }
    }
  }
  return os.str();
}

Point GroupSpec::degree() const {
  Point d = 0;
  for (const Term& t : terms_) d += term_degree(t);
  return d;
}

Group GroupSpec::build() const {
  Point total = degree();
  std::vector<Perm> gens;
  Point offset = 0;
  for (const Term& t : terms_) {
    for (Perm& g : term_generators(t, total, offset)) gens.push_back(std::move(g));
    offset += term_degree(t);
  }
  return Group(std::move(gens), total);
}

}  // namespace genwait
