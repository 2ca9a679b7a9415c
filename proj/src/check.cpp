#include "dynrefl/check.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace dynrefl {

namespace {

std::atomic<unsigned> g_workers{0};

constexpr std::uint64_t kParallelThreshold = 50'000;

Witness make_witness(const Identity& id, const std::vector<Index>& pt) {
  Witness w;
  w.check = id.id;
  w.point = pt;
  std::size_t k = 0;
  if (id.lambda_first && !id.axes.empty()) {
    w.lambda = id.axes[0].labels[pt[0]];
    k = 1;
  }
  for (; k < id.axes.size(); ++k) w.inputs.push_back(id.axes[k].labels[pt[k]]);
  auto [l, r] = id.sides(pt.data());
  w.lhs = std::move(l);
  w.rhs = std::move(r);
  return w;
}

// Least failing point whose first coordinate is `head`.
std::optional<std::vector<Index>> scan_slice(const Identity& id, Index head) {
  const std::size_t d = id.axes.size();
  std::vector<Index> pt(d, 0);
  pt[0] = head;
  for (std::size_t k = 1; k < d; ++k)
    if (id.axes[k].labels.empty()) return std::nullopt;
  while (true) {
    if (!id.holds(pt.data())) return pt;
    std::size_t k = d;
    while (k > 1) {
      --k;
      if (++pt[k] < id.axes[k].labels.size()) break;
      pt[k] = 0;
      if (k == 1) return std::nullopt;
    }
    if (d == 1) return std::nullopt;
  }
}

}  // namespace

std::uint64_t Identity::points() const {
  std::uint64_t n = 1;
  for (const auto& a : axes) n *= a.labels.size();
  return n;
}

void set_workers(unsigned n) { g_workers = n; }

unsigned workers() {
  if (unsigned w = g_workers.load()) return w;
  if (const char* env = std::getenv("DYNREFL_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CheckResult run_check(const Identity& id) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check = id.id;
  r.tuples = id.points();
  if (id.axes.empty()) {
    // Nullary identity: a single evaluation.
    if (!id.holds(nullptr)) {
      r.passed = false;
      r.witness = make_witness(id, {});
    }
  } else if (r.tuples > 0) {
    const Index heads = static_cast<Index>(id.axes[0].labels.size());
    const unsigned nw = std::min<unsigned>(workers(), heads);
    std::optional<std::vector<Index>> best;
    if (nw <= 1 || r.tuples < kParallelThreshold) {
      for (Index h = 0; h < heads && !best; ++h) best = scan_slice(id, h);
    } else {
      std::atomic<Index> next{0};
      std::atomic<Index> best_head{heads};
      std::mutex mu;
      auto work = [&] {
        while (true) {
          Index h = next.fetch_add(1);
          if (h >= heads || h > best_head.load()) return;
          if (auto w = scan_slice(id, h)) {
            std::lock_guard lock(mu);
            if (!best || *w < *best) {
              best = std::move(w);
              best_head = (*best)[0];
            }
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < nw; ++i) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (best) {
      r.passed = false;
      r.witness = make_witness(id, *best);
    }
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

CheckResult fact(const std::string& id, bool passed, const std::string& note) {
  CheckResult r;
  r.check = id;
  r.passed = passed;
  r.tuples = 1;
  if (!passed) {
    Witness w;
    w.check = id;
    w.lhs = note;
    r.witness = w;
  }
  return r;
}

std::vector<Index> locate(const Identity& id, const std::optional<std::string>& lambda,
                          const std::vector<std::string>& inputs) {
  std::vector<std::string> labels;
  if (id.lambda_first) {
    if (!lambda) throw Error("UnknownLabel", "witness lacks a lambda");
    labels.push_back(*lambda);
  }
  labels.insert(labels.end(), inputs.begin(), inputs.end());
  if (labels.size() != id.axes.size())
    throw Error("SizeMismatch", "witness arity does not match '" + id.id + "'");
  std::vector<Index> pt;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto& ax = id.axes[k].labels;
    auto it = std::find(ax.begin(), ax.end(), labels[k]);
    if (it == ax.end())
      throw Error("UnknownLabel", "'" + labels[k] + "' is not on axis " + id.axes[k].name,
                  {labels[k]});
    pt.push_back(static_cast<Index>(it - ax.begin()));
  }
  return pt;
}

bool replay(const Identity& id, const Witness& w) {
  auto pt = locate(id, w.lambda, w.inputs);
  return !id.holds(pt.empty() ? nullptr : pt.data());
}

}  // namespace dynrefl
