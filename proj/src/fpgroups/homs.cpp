#include "braidmon/fpgroups/homs.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "braidmon/error.hpp"

namespace braidmon {

namespace {

// Relators grouped by the last generator they mention, so each is checked as
// soon as all of its letters have images.
class HomSearch {
 public:
  HomSearch(const Presentation& p, const FiniteGroupTable& t, std::uint64_t budget,
            std::atomic<std::uint64_t>* shared_nodes)
      : t_(t), n_(p.generators()), budget_(budget), shared_(shared_nodes), by_level_(n_) {
    for (const auto& r : p.relators()) {
      int top = 0;
      for (int l : r.letters()) top = std::max(top, std::abs(l));
      if (top > n_) throw InputError("relator mentions an undeclared generator");
      by_level_[top - 1].push_back(r.letters());
    }
    images_.assign(n_, t.identity());
  }

  // Runs the subtree with generator 1 fixed to `first` (or all of it when
  // first < 0); returns the number of leaves accepted by visit.
  template <typename Visit>
  std::uint64_t Run(int first, Visit&& visit) {
    if (n_ == 0) {
      visit(images_);
      return 1;
    }
    stop_ = false;
    std::uint64_t count = 0;
    if (first >= 0) {
      images_[0] = first;
      Tick();
      if (Satisfied(0)) Descend(1, count, visit);
    } else {
      Descend(0, count, visit);
    }
    Flush();
    return count;
  }

 private:
  bool Satisfied(int level) const {
    for (const auto& r : by_level_[level]) {
      int acc = t_.identity();
      for (int l : r) {
        const int g = images_[std::abs(l) - 1];
        acc = t_.Multiply(acc, l > 0 ? g : t_.Inverse(g));
      }
      if (acc != t_.identity()) return false;
    }
    return true;
  }

  template <typename Visit>
  void Descend(int level, std::uint64_t& count, Visit& visit) {
    if (level == n_) {
      ++count;
      if (!visit(images_)) stop_ = true;
      return;
    }
    for (int a = 0; a < t_.order() && !stop_; ++a) {
      images_[level] = a;
      Tick();
      if (Satisfied(level)) Descend(level + 1, count, visit);
    }
  }

  void Tick() {
    if (++local_ >= 4096) Flush();
  }

  void Flush() {
    const std::uint64_t total = shared_->fetch_add(local_) + local_;
    local_ = 0;
    if (total > budget_) throw BudgetExceeded("homomorphism search exceeded its node budget");
  }

  const FiniteGroupTable& t_;
  int n_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>* shared_;
  std::uint64_t local_ = 0;
  bool stop_ = false;
  std::vector<std::vector<std::vector<int>>> by_level_;
  std::vector<int> images_;
};

}  // namespace

std::uint64_t CountHoms(const Presentation& p, const FiniteGroupTable& t,
                        const HomSearchOptions& options) {
  std::atomic<std::uint64_t> nodes{0};
  auto accept = [](const std::vector<int>&) { return true; };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || p.generators() == 0) {
    HomSearch search(p, t, options.node_budget, &nodes);
    return search.Run(-1, accept);
  }

  std::vector<std::uint64_t> per_image(t.order(), 0);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      HomSearch search(p, t, options.node_budget, &nodes);
      for (int a = next++; a < t.order(); a = next++) per_image[a] = search.Run(a, accept);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = t.order();
    }
  };
  std::vector<std::thread> threads;
  for (int j = 0; j < std::min(jobs, t.order()); ++j) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
  std::uint64_t total = 0;
  for (auto c : per_image) total += c;
  return total;
}

void EnumerateHoms(const Presentation& p, const FiniteGroupTable& t,
                   const std::function<bool(const std::vector<int>&)>& visit,
                   std::uint64_t node_budget) {
  std::atomic<std::uint64_t> nodes{0};
  HomSearch search(p, t, node_budget, &nodes);
  search.Run(-1, visit);
}

bool CentralInQuotients(const Presentation& p, const FreeWord& w,
                        const std::vector<FiniteGroupTable>& tests, std::uint64_t node_budget) {
  if (w.rank() > p.generators()) throw InputError("word rank exceeds presentation rank");
  for (const auto& t : tests) {
    bool central = true;
    EnumerateHoms(
        p, t,
        [&](const std::vector<int>& images) {
          const int z = t.Evaluate(w, images);
          for (int g : images)
            if (t.Multiply(z, g) != t.Multiply(g, z)) {
              central = false;
              return false;
            }
          return true;
        },
        node_budget);
    if (!central) return false;
  }
  return true;
}

}  // namespace braidmon
