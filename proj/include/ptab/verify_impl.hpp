#pragma once

#include <algorithm>
#include <thread>

namespace ptab {

template <typename Acc>
Acc reduce_permutations(int n, int jobs, const std::function<Acc()>& make,
                        const std::function<void(Acc&, const Permutation&)>& visit,
                        const std::function<void(Acc&, Acc&&)>& merge) {
  Acc result = make();
  if (n == 0) {
    visit(result, Permutation());
    return result;
  }
  std::vector<Acc> shards;
  shards.reserve(n);
  for (int first = 1; first <= n; ++first) shards.push_back(make());

  const int workers = std::clamp(jobs, 1, n);
  auto run = [&](int worker) {
    for (int first = worker + 1; first <= n; first += workers) {
      Acc& acc = shards[first - 1];
      for_each_permutation_starting_with(n, first, [&](const Permutation& p) { visit(acc, p); });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  for (auto& shard : shards) merge(result, std::move(shard));
  return result;
}

}  // namespace ptab
