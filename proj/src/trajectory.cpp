#include "braidforge/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "braidforge/garside.hpp"

namespace braidforge {

namespace {

constexpr int kMaxRefineDepth = 8;
constexpr double kClusterResolution = 1.0 / 4096.0;

struct Tie {};  // internal: an ambiguous projection, retried with a new angle

using Config = std::vector<std::complex<double>>;

struct Projector {
  std::complex<double> dir;

  double proj(const std::complex<double>& z) const { return (z * dir).real(); }
  double orth(const std::complex<double>& z) const { return (z * dir).imag(); }
};

// Strand ids sorted by projected coordinate. `strict` demands separation
// above eps; refinement midpoints may instead report failure via nullopt.
std::vector<int> order_of(const Config& c, const Projector& pr, double eps,
                          bool* ok) {
  std::vector<int> order(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double pa = pr.proj(c[a]), pb = pr.proj(c[b]);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  *ok = true;
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (pr.proj(c[order[i + 1]]) - pr.proj(c[order[i]]) <= eps) *ok = false;
  return order;
}

class Extractor {
 public:
  Extractor(const StrandPaths& paths, double angle, double eps)
      : paths_(paths), eps_(eps) {
    pr_.dir = std::polar(1.0, -angle);
  }

  std::vector<int> run() {
    bool ok = true;
    std::vector<int> prev = order_of(paths_.positions[0], pr_, eps_, &ok);
    if (!ok) throw Tie{};
    for (std::size_t s = 0; s + 1 < paths_.positions.size(); ++s) {
      std::vector<int> next = order_of(paths_.positions[s + 1], pr_, eps_, &ok);
      if (!ok) throw Tie{};
      interval(paths_.positions[s], paths_.positions[s + 1], prev, next, 0);
      prev = std::move(next);
    }
    return std::move(letters_);
  }

 private:
  // True when `b` is `a` with exactly one adjacent pair exchanged; reports
  // the exchanged position.
  static bool single_swap(const std::vector<int>& a, const std::vector<int>& b,
                          int* at) {
    int found = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      if (i + 1 < a.size() && a[i] == b[i + 1] && a[i + 1] == b[i] &&
          found < 0) {
        found = static_cast<int>(i);
        ++i;
        continue;
      }
      return false;
    }
    *at = found;
    return found >= 0;
  }

  struct Crossing {
    double when;  // within [0,1] of the interval
    int left, right;
    int sign;
  };

  Crossing crossing_of(const Config& ca, const Config& cb, int left, int right) const {
    const double da = pr_.proj(ca[right]) - pr_.proj(ca[left]);
    const double db = pr_.proj(cb[right]) - pr_.proj(cb[left]);
    // `left` precedes `right` at the start and trails it at the end.
    const double lambda = da / (da - db);
    const double oa = pr_.orth(ca[right]) - pr_.orth(ca[left]);
    const double ob = pr_.orth(cb[right]) - pr_.orth(cb[left]);
    const double delta = oa + lambda * (ob - oa);
    if (std::abs(delta) <= eps_) throw Tie{};
    // Counterclockwise exchange: the incoming right-hand strand sits on the
    // positive orthogonal side when the projections meet.
    return Crossing{lambda, left, right, delta > 0 ? 1 : -1};
  }

  void interval(const Config& ca, const Config& cb, const std::vector<int>& oa,
                const std::vector<int>& ob, int depth) {
    if (oa == ob) return;
    int at = -1;
    if (single_swap(oa, ob, &at)) {
      const Crossing cr = crossing_of(ca, cb, oa[at], oa[at + 1]);
      letters_.push_back(cr.sign * (at + 1));
      return;
    }
    if (depth < kMaxRefineDepth) {
      Config mid(ca.size());
      for (std::size_t i = 0; i < ca.size(); ++i) mid[i] = 0.5 * (ca[i] + cb[i]);
      bool ok = true;
      const std::vector<int> om = order_of(mid, pr_, eps_, &ok);
      if (ok) {
        interval(ca, mid, oa, om, depth + 1);
        interval(mid, cb, om, ob, depth + 1);
        return;
      }
    }
    decompose(ca, cb, oa, ob);
  }

  // Refinement bottomed out: read the interval from the interpolated motion.
  // Every inverted pair crosses exactly once in the linear model; crossings
  // are emitted in time order, and simultaneous bundles are only accepted
  // when their signs agree (then any reduced order yields the same braid).
  void decompose(const Config& ca, const Config& cb, const std::vector<int>& oa,
                 const std::vector<int>& ob) {
    const int k = static_cast<int>(oa.size());
    std::vector<int> pos_b(k);
    for (int i = 0; i < k; ++i) pos_b[ob[i]] = i;

    std::vector<Crossing> events;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (pos_b[oa[i]] > pos_b[oa[j]])
          events.push_back(crossing_of(ca, cb, oa[i], oa[j]));
    std::stable_sort(events.begin(), events.end(),
                     [](const Crossing& x, const Crossing& y) { return x.when < y.when; });

    std::vector<int> cur = oa;
    std::size_t head = 0;
    while (head < events.size()) {
      std::size_t tail = head + 1;
      while (tail < events.size() &&
             events[tail].when - events[tail - 1].when <= kClusterResolution)
        ++tail;

      // Simultaneous crossings that share a strand must agree in sign.
      for (std::size_t x = head; x < tail; ++x)
        for (std::size_t y = x + 1; y < tail; ++y) {
          const Crossing &ex = events[x], &ey = events[y];
          const bool shares = ex.left == ey.left || ex.left == ey.right ||
                              ex.right == ey.left || ex.right == ey.right;
          if (shares && ex.sign != ey.sign) throw Tie{};
        }

      std::vector<bool> done(tail - head, false);
      std::size_t remaining = tail - head;
      while (remaining > 0) {
        bool progressed = false;
        for (int a = 0; a + 1 < k && !progressed; ++a) {
          for (std::size_t x = head; x < tail; ++x) {
            if (done[x - head]) continue;
            const Crossing& ev = events[x];
            const bool match = (cur[a] == ev.left && cur[a + 1] == ev.right) ||
                               (cur[a] == ev.right && cur[a + 1] == ev.left);
            if (!match) continue;
            letters_.push_back(ev.sign * (a + 1));
            std::swap(cur[a], cur[a + 1]);
            done[x - head] = true;
            --remaining;
            progressed = true;
            break;
          }
        }
        if (!progressed)
          throw UndersampledCrossing(
              "crossing order within one sample interval cannot be resolved");
      }
      head = tail;
    }
    if (cur != ob)
      throw UndersampledCrossing(
          "sample interval hides a double swap; supply more samples");
  }

  const StrandPaths& paths_;
  Projector pr_;
  double eps_;
  std::vector<int> letters_;
};

}  // namespace

void StrandPaths::validate() const {
  if (strand_count < 1) throw Error("strand count must be >= 1");
  if (times.size() != positions.size() || times.size() < 2)
    throw Error("need matching time and position lists with at least two samples");
  if (times.front() != 0.0 || times.back() != 1.0)
    throw Error("sample times must start at 0 and end at 1");
  for (std::size_t s = 0; s + 1 < times.size(); ++s)
    if (!(times[s] < times[s + 1])) throw Error("sample times must increase strictly");
  for (const Config& c : positions) {
    if (static_cast<int>(c.size()) != strand_count)
      throw Error("sample with wrong number of positions");
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (c[i] == c[j]) throw Error("strand positions must stay distinct");
  }
  auto key = [](const Config& c) {
    std::vector<std::pair<double, double>> k;
    for (const auto& z : c) k.emplace_back(z.real(), z.imag());
    std::sort(k.begin(), k.end());
    return k;
  };
  if (key(positions.front()) != key(positions.back()))
    throw Error("trajectories must close up to a permutation of the strands");
}

StrandPaths StrandPaths::time_reversed() const {
  StrandPaths out;
  out.strand_count = strand_count;
  out.times.reserve(times.size());
  for (auto it = times.rbegin(); it != times.rend(); ++it) out.times.push_back(1.0 - *it);
  out.positions.assign(positions.rbegin(), positions.rend());
  return out;
}

StrandPaths sample_concentric_loop(int k, int num_samples) {
  if (k < 1) throw Error("need at least one strand");
  if (num_samples < 8 * k * k || num_samples < 2)
    throw TooFewSamples("need at least 8*k^2 samples");
  StrandPaths paths;
  paths.strand_count = k;
  paths.times.reserve(num_samples);
  paths.positions.reserve(num_samples);
  for (int s = 0; s < num_samples; ++s) {
    const double t = static_cast<double>(s) / (num_samples - 1);
    Config c(k);
    for (int j = 1; j <= k; ++j)
      c[j - 1] = static_cast<double>(j) * std::polar(1.0, 2.0 * std::numbers::pi * t);
    paths.times.push_back(t);
    paths.positions.push_back(std::move(c));
  }
  paths.times.back() = 1.0;
  paths.positions.back() = paths.positions.front();  // close the loop exactly
  return paths;
}

BraidWord extract_braid(const StrandPaths& paths, const ExtractionParams& params) {
  paths.validate();
  if (params.tie_tolerance <= 0) throw Error("tie tolerance must be positive");
  if (paths.strand_count == 1) return BraidWord::identity(1);

  double diameter = 0;
  for (const Config& c : paths.positions)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        diameter = std::max(diameter, std::abs(c[i] - c[j]));
  const double eps = params.tie_tolerance * diameter;

  std::mt19937_64 rng(params.retry_seed);
  std::uniform_real_distribution<double> pick_angle(0.0, std::numbers::pi);
  double angle = params.projection_angle;
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    try {
      return BraidWord(paths.strand_count,
                       Extractor(paths, angle, eps).run());
    } catch (const Tie&) {
      angle = pick_angle(rng);
    }
  }
  throw DegenerateProjection("no projection angle resolved all crossings");
}

bool concentric_loop_is_full_twist(int k) {
  if (k < 2 || k > 6) throw InvalidRange("supported strand range is 2..6");
  const StrandPaths paths = sample_concentric_loop(k, std::max(128, 8 * k * k));
  const BraidWord extracted = extract_braid(paths);
  return braids_equal(extracted, full_twist_word(k, FullTwistVariant::kF));
}

}  // namespace braidforge
