#include "quadsyn/oracle.hpp"

#include "quadsyn/error.hpp"
#include "quadsyn/linalg.hpp"

namespace quadsyn {

std::array<Rational, 10> veronese_row(const Vec4& v) {
  std::array<Rational, 10> row;
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) row[n++] = v[i] * v[j];
  }
  return row;
}

Rational evaluate(const QuadricCoeffs& q, const Point& p) {
  const auto row = veronese_row(p);
  Rational s = 0;
  for (std::size_t i = 0; i < 10; ++i) s += q[i] * row[i];
  return s;
}

bool vanishes_on(const QuadricCoeffs& q, std::span<const Point> pts) {
  for (const auto& p : pts) {
    if (sgn(evaluate(q, p)) != 0) return false;
  }
  return true;
}

Integer det_N(std::span<const Point> pts) {
  if (pts.size() != 10) fail(ErrorKind::PreconditionViolated, "N needs exactly 10 points");
  linalg::IntMatrix m(10, std::vector<Integer>(10));
  for (std::size_t r = 0; r < 10; ++r) {
    const auto row = veronese_row(pts[r]);
    for (std::size_t c = 0; c < 10; ++c) m[r][c] = row[c].get_num();
  }
  return linalg::determinant_bareiss(std::move(m));
}

bool oracle_decide(std::span<const Point> pts) { return sgn(det_N(pts)) == 0; }

std::vector<QuadricCoeffs> quadric_through(std::span<const Point> pts) {
  linalg::RatMatrix m;
  for (const auto& p : pts) {
    const auto row = veronese_row(p);
    m.emplace_back(row.begin(), row.end());
  }
  std::vector<QuadricCoeffs> out;
  for (const auto& v : linalg::kernel(std::move(m), 10)) {
    QuadricCoeffs q;
    std::copy(v.begin(), v.end(), q.begin());
    out.push_back(std::move(q));
  }
  return out;
}

QuadricCoeffs product_of_forms(const Vec4& h1, const Vec4& h2) {
  QuadricCoeffs q;
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      q[n++] = i == j ? Rational(h1[i] * h2[i]) : Rational(h1[i] * h2[j] + h1[j] * h2[i]);
    }
  }
  return q;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256**
Rng::Rng(std::uint64_t seed) {
  for (std::uint64_t i = 0; i < 4; ++i) state_[i] = mix_seed(seed, i);
}

std::uint64_t Rng::next() {
  auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % range);
}

Rational Rng::rational(std::int64_t num_bound, std::int64_t den_bound) {
  Rational r(static_cast<long>(uniform(-num_bound, num_bound)), static_cast<unsigned long>(uniform(1, den_bound)));
  r.canonicalize();
  return r;
}

ProjectiveTransform random_transform(Rng& rng, std::int64_t bound) {
  for (;;) {
    Mat4 m;
    for (auto& row : m) {
      for (auto& e : row) e = Rational(static_cast<long>(rng.uniform(-bound, bound)));
    }
    if (sgn(determinant(m)) != 0) return ProjectiveTransform(m);
  }
}

std::vector<Point> sample_on_quadric(std::uint64_t seed, int n, bool transform, SamplerBounds b) {
  Rng rng(seed);
  std::vector<Point> pts;
  for (int k = 0; k < n; ++k) {
    const Rational s = rng.rational(b.num, b.den);
    const Rational t = rng.rational(b.num, b.den);
    pts.emplace_back(Rational(1), s, t, s * t);
  }
  if (transform) {
    const auto tr = random_transform(rng);
    for (auto& p : pts) p = tr.apply(p);
  }
  return pts;
}

std::vector<Point> sample_generic(std::uint64_t seed, int n, SamplerBounds b) {
  Rng rng(seed);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    Vec4 v{rng.rational(b.num, b.den), rng.rational(b.num, b.den), rng.rational(b.num, b.den), rng.rational(b.num, b.den)};
    if (!is_zero(v)) pts.emplace_back(v);
  }
  return pts;
}

}  // namespace quadsyn
