#include "orthocurrent/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace orthocurrent {

namespace {

constexpr std::size_t kMaxAmbient = 6;

void check_q(unsigned q) {
  if (q != 2 && q != 3 && q != 5) throw Error(ErrorKind::UnsupportedField, "oracle supports F2, F3 and F5 only");
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t c = start; c + (k - cur.size()) <= n; ++c) {
    cur.push_back(c);
    combinations(n, k, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SubspaceEnumerator::SubspaceEnumerator(unsigned q, std::size_t n, std::size_t k) : q_(q), n_(n), k_(k) {
  check_q(q);
  if (n > kMaxAmbient || k > n) throw Error(ErrorKind::ShapeMismatch, "enumeration needs k <= n <= 6");
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, patterns_);
}

void SubspaceEnumerator::for_each_in_pattern(std::size_t pattern, const Visitor& visit) const {
  const auto& piv = patterns_.at(pattern);
  std::vector<std::uint8_t> m(k_ * n_, 0);
  std::vector<bool> is_pivot(n_, false);
  for (std::size_t r = 0; r < k_; ++r) {
    m[r * n_ + piv[r]] = 1;
    is_pivot[piv[r]] = true;
  }
  // Free entries: right of the row's pivot, outside pivot columns.
  std::vector<std::size_t> free;
  for (std::size_t r = 0; r < k_; ++r) {
    for (std::size_t c = piv[r] + 1; c < n_; ++c) {
      if (!is_pivot[c]) free.push_back(r * n_ + c);
    }
  }
  for (;;) {
    visit(m);
    std::size_t i = 0;
    while (i < free.size()) {
      auto& e = m[free[i]];
      if (++e < q_) break;
      e = 0;
      ++i;
    }
    if (i == free.size()) return;
  }
}

void SubspaceEnumerator::for_each(const Visitor& visit) const {
  for (std::size_t p = 0; p < patterns_.size(); ++p) for_each_in_pattern(p, visit);
}

namespace {

Subspace to_subspace(const Field& field, std::span<const std::uint8_t> rows, std::size_t k, std::size_t n) {
  std::vector<Vector> vs;
  vs.reserve(k);
  for (std::size_t r = 0; r < k; ++r) {
    Vector v;
    v.reserve(n);
    for (std::size_t c = 0; c < n; ++c) v.push_back(field.from_residue(rows[r * n + c]));
    vs.push_back(std::move(v));
  }
  return canonicalize_subspace(field, vs, n);
}

}  // namespace

void enumerate_subspaces(unsigned q, std::size_t n, std::size_t k, const std::function<void(const Subspace&)>& visit) {
  SubspaceEnumerator e(q, n, k);
  const Field field = Field::prime(q);
  e.for_each([&](std::span<const std::uint8_t> rows) { visit(to_subspace(field, rows, k, n)); });
}

std::uint64_t count_subspaces(unsigned q, std::size_t n, std::size_t k) {
  SubspaceEnumerator e(q, n, k);
  std::uint64_t count = 0;
  e.for_each([&](std::span<const std::uint8_t>) { ++count; });
  return count;
}

std::vector<Subspace> enumerate_ideals(const LieAlgebra& l, unsigned threads) {
  const Field& field = l.field();
  if (field.kind() != FieldKind::PrimeField) throw Error(ErrorKind::UnsupportedField, "oracle needs a prime field");
  const unsigned q = field.characteristic();
  check_q(q);
  const std::size_t n = l.dim();
  if (n > kMaxAmbient) throw Error(ErrorKind::ShapeMismatch, "oracle handles algebras of dimension <= 6");

  // ad[i][k][j] = c(i, j, k) as residues.
  std::vector<std::uint8_t> ad(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) ad[(i * n + k) * n + j] = static_cast<std::uint8_t>(l.constants()(i, j, k).residue());
    }
  }

  struct Job {
    std::size_t k;
    std::size_t pattern;
  };
  std::vector<SubspaceEnumerator> enumerators;
  std::vector<Job> jobs;
  for (std::size_t k = 0; k <= n; ++k) enumerators.emplace_back(q, n, k);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t p = 0; p < enumerators[k].pattern_count(); ++p) jobs.push_back({k, p});
  }
  std::vector<std::vector<std::vector<std::uint8_t>>> found(jobs.size());

  auto run_job = [&](std::size_t job_index) {
    const auto [k, pattern] = jobs[job_index];
    const auto& piv = enumerators[k].pattern(pattern);
    auto& sink = found[job_index];
    std::uint8_t w[kMaxAmbient];
    enumerators[k].for_each_in_pattern(pattern, [&](std::span<const std::uint8_t> rows) {
      // [b_i, row_r] must reduce to zero against the RREF rows; early exit.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t a = 0; a < n; ++a) {
            unsigned acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += unsigned{ad[(i * n + a) * n + j]} * rows[r * n + j];
            w[a] = static_cast<std::uint8_t>(acc % q);
          }
          for (std::size_t s = 0; s < k; ++s) {
            unsigned coef = w[piv[s]];
            if (coef == 0) continue;
            for (std::size_t a = 0; a < n; ++a) w[a] = static_cast<std::uint8_t>((w[a] + (q - coef) * rows[s * n + a]) % q);
          }
          for (std::size_t a = 0; a < n; ++a) {
            if (w[a] != 0) return;
          }
        }
      }
      sink.emplace_back(rows.begin(), rows.end());
    });
  };

  unsigned workers = threads != 0 ? threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));
  if (workers <= 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) run_job(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) run_job(j);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<Subspace> ideals;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    for (const auto& rows : found[j]) ideals.push_back(to_subspace(field, rows, jobs[j].k, n));
  }
  std::sort(ideals.begin(), ideals.end());
  return ideals;
}

}  // namespace orthocurrent
