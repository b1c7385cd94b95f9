#include "excov/census.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

namespace excov {

const char* row_class_name(RowClass c) {
  switch (c) {
    case RowClass::Trivial: return "trivial";
    case RowClass::Adjoint: return "adjoint";
    case RowClass::LittleAdjoint: return "little_adjoint";
    case RowClass::SymmetricPower: return "symmetric_power";
    case RowClass::SymmetricPowerDual: return "symmetric_power_dual";
    case RowClass::Other: return "other";
  }
  return "other";
}

std::vector<Weight> CensusReport::passing_weights() const {
  std::vector<Weight> out;
  for (const auto& r : rows)
    if (r.passes) out.push_back(r.weight);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

RowClass classify(const RootSystem& rs, const Weight& w) {
  if (w.is_zero()) return RowClass::Trivial;
  if (w == rs.theta()) return RowClass::Adjoint;
  if (rs.theta_s() && w == *rs.theta_s()) return RowClass::LittleAdjoint;
  if (rs.type() == LieType::A) {
    const int64_t n = rs.rank() + 1;
    std::vector<int64_t> first(rs.rank(), 0), last(rs.rank(), 0);
    first[0] = n;
    last[rs.rank() - 1] = n;
    if (w.fund == first) return RowClass::SymmetricPower;
    if (w.fund == last) return RowClass::SymmetricPowerDual;
  }
  return RowClass::Other;
}

}  // namespace

std::vector<Weight> enumerate_small_weights(const RootSystem& rs, int box_bound) {
  if (box_bound < 1) throw std::invalid_argument("box_bound must be >= 1");
  const int r = rs.rank();
  std::vector<Weight> found;
  std::vector<int64_t> c(r, 0);
  for (;;) {
    const Weight w{c};
    if (rs.in_root_lattice(w) && is_small(rs, w).small) found.push_back(w);
    int i = 0;
    while (i < r) {
      if (++c[i] <= box_bound) break;
      c[i] = 0;
      ++i;
    }
    if (i == r) break;
  }
  // Margin certificate: non-smallness is upward monotone along dominant
  // root-lattice shifts, so small weights hugging the box boundary mean the
  // box may have cut the enumeration short.
  for (const auto& w : found) {
    for (int64_t v : w.fund) {
      if (v > box_bound - 2) {
        std::ostringstream os;
        os << "margin certificate failed for " << rs.name() << ": small weight "
           << to_string(w) << " has a coordinate above " << (box_bound - 2)
           << "; rerun with a box bound larger than " << box_bound;
        throw MarginCertificateError(os.str());
      }
    }
  }
  std::sort(found.begin(), found.end(), [&](const Weight& a, const Weight& b) {
    const Int da = weyl_dimension(rs, a), db = weyl_dimension(rs, b);
    return da != db ? da < db : a < b;
  });
  return found;
}

CensusReport run_census(const RootSystem& rs, const CensusOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport rep;
  rep.type = rs.type();
  rep.rank = rs.rank();

  std::vector<Weight> smalls;
  int box = opt.box_bound;
  for (;;) {
    try {
      smalls = enumerate_small_weights(rs, box);
      break;
    } catch (const MarginCertificateError&) {
      box += 2;
      if (box > opt.max_box_bound) throw;
    }
  }
  rep.box_bound = box;

  const CharMode mode =
      opt.mode ? *opt.mode
               : (rs.num_positive_roots() <= 20 && rs.rank() <= opt.max_full_rank
                      ? CharMode::Full
                      : CharMode::Targeted);
  GradedCharacter::Options copt;
  copt.max_full_rank = opt.max_full_rank;
  const GradedCharacter chr = GradedCharacter::build(rs, mode, copt);
  const WeylGroup weyl = WeylGroup::generate(rs);

  auto make_row = [&](const Weight& w) {
    CensusRow row;
    row.weight = w;
    const IrrepInfo info = irrep_info(rs, w);
    row.dim = info.dim;
    row.zero_weight_dim = info.zero_weight_dim;
    row.gm = graded_multiplicity(rs, weyl, w, chr);
    row.reeder_ok = row.gm.eval_one() == pow2(rs.rank()) * Int(row.zero_weight_dim);
    row.verdict = freeness_divisibility(row.gm, rs, row.zero_weight_dim);
    row.cls = classify(rs, w);
    row.passes = row.verdict.passes();
    return row;
  };

  const auto out_of_budget = [&]() {
    if (opt.budget_seconds <= 0) return false;
    const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
    return used.count() > opt.budget_seconds;
  };

  if (opt.jobs > 1) {
    std::vector<std::future<CensusRow>> futs;
    futs.reserve(smalls.size());
    for (const auto& w : smalls)
      futs.push_back(std::async(std::launch::async, [&, w] { return make_row(w); }));
    for (auto& f : futs) rep.rows.push_back(f.get());
  } else {
    for (const auto& w : smalls) {
      if (out_of_budget()) {
        rep.complete = false;
        std::ostringstream os;
        os << "budget of " << opt.budget_seconds << "s exhausted after " << rep.rows.size()
           << " of " << smalls.size() << " rows";
        rep.note = os.str();
        break;
      }
      rep.rows.push_back(make_row(w));
    }
  }

  std::sort(rep.rows.begin(), rep.rows.end(), [](const CensusRow& a, const CensusRow& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.weight < b.weight;
  });
  return rep;
}

ScanAReport type_a_partition_scan(int n) {
  if (n < 4 || n > 8)
    throw std::invalid_argument("type_a_partition_scan covers 4 <= n <= 8");
  ScanAReport rep;
  rep.n = n;
  QPoly divisor = QPoly::one();
  for (int i = 1; i <= n - 2; ++i) divisor = divisor * QPoly::one_plus_q_pow(2 * i + 1);

  std::vector<int> column(n, 1);
  const Partition trivial_column(column);
  std::vector<int> hook_shape{2};
  for (int i = 0; i < n - 2; ++i) hook_shape.push_back(1);
  const Partition adjoint_shape(hook_shape);
  const Partition row_shape(std::vector<int>{n});

  for (const auto& p : Partition::all_of(n)) {
    if (p == trivial_column) continue;
    ScanARow row;
    row.partition = p;
    row.weight = partition_to_weight(p);
    row.gm = stembridge_gm(p);
    row.divisible = row.gm.exact_div(divisor).has_value();
    row.expected_divisible = (p == row_shape || p == adjoint_shape);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool ScanAReport::all_ok() const {
  for (const auto& r : rows)
    if (!r.ok()) return false;
  return true;
}

std::vector<Weight> expected_passing_weights(const RootSystem& rs) {
  std::set<Weight> out{rs.zero_weight(), rs.theta()};
  if (rs.theta_s()) out.insert(*rs.theta_s());
  if (rs.type() == LieType::A) {
    const int64_t n = rs.rank() + 1;
    std::vector<int64_t> first(rs.rank(), 0), last(rs.rank(), 0);
    first[0] = n;
    last[rs.rank() - 1] = n;
    out.insert(Weight(first));
    out.insert(Weight(last));
  }
  return {out.begin(), out.end()};
}

}  // namespace excov
