#include "hocd/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

namespace hocd {

std::string_view to_string(ClassicalExclusion rule) noexcept {
  switch (rule) {
    case ClassicalExclusion::Vanishing: return "vanishing";
    case ClassicalExclusion::AllZero: return "all-zero";
  }
  return "none";
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("HOCD_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool linearly_dependent(const Field& field, std::span<const Element> vectors) {
  const std::uint32_t p = field.characteristic();
  const std::uint32_t n = field.degree();
  if (vectors.size() > n) return true;
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(vectors.size());
  for (Element v : vectors) rows.push_back(field.digits(v));

  auto inv_mod = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    for (a %= p; e; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  };

  std::size_t rank = 0;
  for (std::uint32_t col = 0; col < n && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [col](const auto& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const std::uint64_t scale = inv_mod(rows[rank][col]);
    for (auto& d : rows[rank]) d = static_cast<std::uint32_t>(d * scale % p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t factor = rows[r][col];
      if (!factor) continue;
      for (std::uint32_t j = 0; j < n; ++j)
        rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + p - factor * rows[rank][j] % p) % p);
    }
    ++rank;
  }
  return rank < rows.size();
}

bool classical_operator_vanishes(const Field& field, std::span<const Element> shifts) {
  const std::size_t t = shifts.size();
  if (t > kMaxClosedFormOrder)
    throw Error(ErrorKind::OrderTooHigh, "operator check limited to order " + std::to_string(kMaxClosedFormOrder));
  if (std::ranges::any_of(shifts, [](Element a) { return a == 0; })) return true;
  const std::uint32_t p = field.characteristic();
  std::map<Element, std::uint32_t> coeff;
  std::vector<Element> sums(std::size_t{1} << t, 0);
  for (std::size_t mask = 0; mask < sums.size(); ++mask) {
    if (mask) sums[mask] = field.add(sums[mask & (mask - 1)], shifts[static_cast<std::size_t>(std::countr_zero(mask))]);
    const bool negative = (t - static_cast<std::size_t>(std::popcount(mask))) % 2 == 1;
    auto& slot = coeff[sums[mask]];
    slot = (slot + (negative ? p - 1 : 1)) % p;
  }
  return std::ranges::all_of(coeff, [](const auto& kv) { return kv.second == 0; });
}

std::uint32_t count_solutions(const FieldFunction& f, const DerivativeSpec& spec, Element b) {
  const Field& k = f.field();
  k.check(b);
  const FieldFunction d = spec.order() <= kMaxClosedFormOrder ? higher_c_derivative_closed(f, spec)
                                                              : higher_c_derivative_recursive(f, spec);
  return static_cast<std::uint32_t>(std::ranges::count(d.table(), b));
}

namespace {

// Result of one contiguous block of shift tuples.
struct ChunkResult {
  std::uint32_t max_count = 0;
  std::vector<Witness> witnesses;
  std::uint64_t tuples = 0;
};

class Searcher {
 public:
  Searcher(const FieldFunction& f, std::size_t t, Element c, const SearchOptions& options)
      : f_(f), field_(f.field()), t_(t), c_(c), options_(options) {
    reduced_ = options.reduce_power && t > 0;
    enumerated_dims_ = reduced_ ? t - 1 : t;
    const std::uint64_t q = field_.order();
    total_ = 1;
    for (std::size_t i = 0; i < enumerated_dims_; ++i) {
      if (total_ > (std::uint64_t{1} << 62) / q)
        throw Error(ErrorKind::SizeExceeded, "shift-tuple space too large to enumerate");
      total_ *= q;
    }
    exclude_ = c == 1 && t > 0;
  }

  SpectrumReport run() {
    const auto start = std::chrono::steady_clock::now();
    const unsigned threads = options_.threads ? options_.threads : default_thread_count();
    const std::uint64_t chunk_count = std::min<std::uint64_t>(total_, std::uint64_t{threads} * 16);
    std::vector<ChunkResult> chunks(chunk_count);
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunk_count));
    std::vector<std::vector<std::uint64_t>> histograms(std::max(1u, workers),
                                                       std::vector<std::uint64_t>(field_.order() + 1, 0));

    // The all-zero tuple sits outside the a_1 = 1 slice and precedes it
    // lexicographically.
    ChunkResult zero_chunk;
    if (reduced_ && c_ != 1) {
      Worker w(*this, histograms[0]);
      const std::vector<Element> zeros(t_, 0);
      w.visit(zeros, zero_chunk);
    }

    std::atomic<std::uint64_t> next{0};
    auto body = [&](unsigned id) {
      Worker w(*this, histograms[id]);
      for (std::uint64_t i; (i = next.fetch_add(1)) < chunk_count;) {
        using wide = unsigned __int128;
        const auto begin = static_cast<std::uint64_t>(wide{total_} * i / chunk_count);
        const auto end = static_cast<std::uint64_t>(wide{total_} * (i + 1) / chunk_count);
        w.run_range(begin, end, chunks[i]);
      }
    };
    if (workers <= 1) {
      body(0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned id = 0; id < workers; ++id) pool.emplace_back(body, id);
    }

    SpectrumReport report;
    report.t = t_;
    report.c = c_;
    report.domain.power_reduction = reduced_;
    report.domain.exclusion = exclude_ ? to_string(options_.classical_exclusion) : std::string_view("none");

    std::vector<std::uint64_t> merged(field_.order() + 1, 0);
    for (const auto& h : histograms)
      for (std::size_t k = 0; k < h.size(); ++k) merged[k] += h[k];
    for (std::size_t k = 0; k < merged.size(); ++k)
      if (merged[k]) report.histogram.emplace(static_cast<std::uint32_t>(k), merged[k]);

    std::vector<const ChunkResult*> ordered;
    ordered.push_back(&zero_chunk);
    for (const auto& ch : chunks) ordered.push_back(&ch);
    for (const auto* ch : ordered) {
      report.domain.tuples += ch->tuples;
      report.max_count = std::max(report.max_count, ch->max_count);
    }
    for (const auto* ch : ordered) {
      if (ch->tuples == 0 || ch->max_count != report.max_count) continue;
      for (const auto& w : ch->witnesses) {
        if (report.witnesses.size() >= options_.witness_cap) break;
        report.witnesses.push_back(w);
      }
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

 private:
  class Worker {
   public:
    Worker(const Searcher& s, std::vector<std::uint64_t>& histogram)
        : s_(s), kernel_(s.field_), derivative_(s.field_.order()), counts_(s.field_.order(), 0),
          histogram_(histogram), tuple_(s.t_, 0) {}

    void run_range(std::uint64_t begin, std::uint64_t end, ChunkResult& out) {
      const std::uint64_t q = s_.field_.order();
      const std::size_t offset = s_.reduced_ ? 1 : 0;
      if (s_.reduced_) tuple_[0] = 1;
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t d = s_.t_; d-- > offset;) {
          tuple_[d] = static_cast<Element>(rest % q);
          rest /= q;
        }
        visit(tuple_, out);
      }
    }

    void visit(std::span<const Element> tuple, ChunkResult& out) {
      if (s_.exclude_ && excluded(tuple)) return;
      ++out.tuples;
      kernel_.prepare(s_.c_, tuple);
      kernel_.evaluate(s_.f_.table(), derivative_);
      for (Element v : derivative_) ++counts_[v];
      const std::uint32_t q = s_.field_.order();
      for (Element b = 0; b < q; ++b) {
        const std::uint32_t k = counts_[b];
        counts_[b] = 0;
        ++histogram_[k];
        if (k > out.max_count) {
          out.max_count = k;
          out.witnesses.clear();
        }
        if (k == out.max_count && out.witnesses.size() < s_.options_.witness_cap)
          out.witnesses.push_back({std::vector<Element>(tuple.begin(), tuple.end()), b});
      }
    }

   private:
    bool excluded(std::span<const Element> tuple) const {
      if (s_.options_.classical_exclusion == ClassicalExclusion::AllZero)
        return std::ranges::all_of(tuple, [](Element a) { return a == 0; });
      return classical_operator_vanishes(s_.field_, tuple);
    }

    const Searcher& s_;
    ClosedFormKernel kernel_;
    std::vector<Element> derivative_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint64_t>& histogram_;
    std::vector<Element> tuple_;
  };

  const FieldFunction& f_;
  const Field& field_;
  std::size_t t_;
  Element c_;
  SearchOptions options_;
  bool reduced_ = false;
  bool exclude_ = false;
  std::size_t enumerated_dims_ = 0;
  std::uint64_t total_ = 1;
};

}  // namespace

SpectrumReport uniformity(const FieldFunction& f, std::size_t t, Element c, const SearchOptions& options) {
  f.field().check(c);
  if (t > kMaxClosedFormOrder)
    throw Error(ErrorKind::OrderTooHigh, "search limited to order " + std::to_string(kMaxClosedFormOrder));
  if (options.reduce_power && !std::holds_alternative<Monomial>(f.origin()))
    throw Error(ErrorKind::ReductionUnavailable, "the a_1 = 1 reduction requires a monomial");
  return Searcher(f, t, c, options).run();
}

std::map<Element, SpectrumReport> uniformity_sweep(const FieldFunction& f, std::size_t t,
                                                   std::span<const Element> c_set, const SearchOptions& options) {
  const std::set<Element> unique(c_set.begin(), c_set.end());
  std::map<Element, SpectrumReport> out;
  for (Element c : unique) out.emplace(c, uniformity(f, t, c, options));
  return out;
}

MonotonicityCheck verify_monotonicity(const FieldFunction& f, std::size_t t_max, Element c,
                                      const SearchOptions& options) {
  if (c == 1) throw Error(ErrorKind::PreconditionViolated, "monotonicity in t requires c != 1");
  MonotonicityCheck check;
  check.uniformity_by_order.push_back(max_preimage(f).max_count);
  for (std::size_t t = 1; t <= t_max; ++t) {
    check.uniformity_by_order.push_back(uniformity(f, t, c, options).max_count);
    if (check.uniformity_by_order[t] < check.uniformity_by_order[t - 1]) check.holds = false;
  }
  return check;
}

}  // namespace hocd
