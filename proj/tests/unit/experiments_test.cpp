#include <cmath>
#include <sstream>

#include "augpath/error.hpp"
#include "augpath/experiments.hpp"
#include "augpath/generators.hpp"
#include "helpers.hpp"

using namespace augpath;
using namespace augpath::testing;

namespace {

Rational approx(double x) {
  constexpr std::int64_t kDen = 1'000'000'000'000'000;
  return Rational(static_cast<std::int64_t>(std::llround(x * static_cast<double>(kDen))), kDen);
}

ExperimentRecord synthetic(double t, int length, bool admissible = true) {
  ExperimentRecord r;
  r.graph_id = "synthetic";
  r.eps = approx(std::exp(-t));
  r.shortest_aug_len = length;
  r.admissible = admissible;
  return r;
}

}  // namespace

TEST(Sweep, K4SingleRecord) {
  const auto rec = sweep({{GeneratorKind::Complete, 4, 3, 0, {}}}, SweepOptions{});
  ASSERT_EQ(rec.size(), 1u);
  EXPECT_EQ(rec[0].eps, Rational(1, 1));
  EXPECT_EQ(rec[0].shortest_aug_len, 1);
  EXPECT_EQ(rec[0].stage_k, 0);
}

TEST(Sweep, PrismExcludedWithCertificate) {
  const auto rec = sweep({{GeneratorKind::PrismCliqueChain, 6, 3, 0, {}}}, SweepOptions{});
  ASSERT_FALSE(rec.empty());
  for (const auto& r : rec) {
    EXPECT_FALSE(r.admissible);
    EXPECT_EQ(r.odd_cut_boundary, 3);
    EXPECT_EQ(r.odd_cut_size, 3);
  }
}

TEST(Sweep, RecordInvariantsAndDeterminism) {
  std::vector<GeneratorSpec> specs;
  for (std::uint64_t s = 1; s <= 6; ++s) specs.push_back({GeneratorKind::RandomRegular, 1024, 3, s, {}});
  SweepOptions one;
  one.record_timing = false;
  SweepOptions two = one;
  two.jobs = 2;
  const auto a = sweep(specs, one);
  const auto b = sweep(specs, two);
  EXPECT_EQ(a, b);
  EXPECT_GE(a.size(), specs.size());
  for (const auto& r : a) {
    EXPECT_GT(r.eps.num, 0);
    EXPECT_EQ(r.shortest_aug_len % 2, 1);
    EXPECT_LE(r.shortest_aug_len, 2 * r.stage_k + 1);
  }
  std::ostringstream x, y;
  write_sweep_csv(x, a);
  write_sweep_csv(y, b);
  EXPECT_EQ(x.str(), y.str());
}

TEST(SweepCsv, RoundTrip) {
  const auto rec = sweep({{GeneratorKind::RandomRegular, 256, 3, 2, {}}, {GeneratorKind::PrismCliqueChain, 12, 3, 0, {}}},
                         SweepOptions{});
  std::ostringstream out;
  write_sweep_csv(out, rec);
  std::istringstream in(out.str());
  const auto back = read_sweep_csv(in);
  ASSERT_EQ(back.size(), rec.size());
  for (std::size_t i = 0; i < rec.size(); ++i) {
    EXPECT_EQ(back[i].graph_id, rec[i].graph_id);
    EXPECT_EQ(back[i].eps, rec[i].eps);
    EXPECT_EQ(back[i].c0_lower, rec[i].c0_lower);
    EXPECT_EQ(back[i].odd_cut_set, rec[i].odd_cut_set);
    EXPECT_EQ(back[i], rec[i]);
  }
}

TEST(SweepCsv, SchemaErrors) {
  std::istringstream none("graph_id,n\n");
  EXPECT_THROW_CODE(read_sweep_csv(none), ParseError);
  std::istringstream wrong("# schema: sweep-v0\n");
  EXPECT_THROW_CODE(read_sweep_csv(wrong), ParseError);
}

TEST(FitPolylog, RecoversCubicLaw) {
  std::vector<ExperimentRecord> rec;
  for (int t = 1; t <= 6; ++t) rec.push_back(synthetic(t, 2 * t * t * t));
  const PolylogFit f = fit_polylog(rec);
  EXPECT_NEAR(f.c_hat, 2.0, 1e-6);
  EXPECT_NEAR(f.exponent_hat, 3.0, 1e-6);
  EXPECT_NEAR(f.r2, 1.0, 1e-9);
}

TEST(FitPolylog, RecoversLinearLaw) {
  std::vector<ExperimentRecord> rec;
  for (int t = 1; t <= 7; ++t) rec.push_back(synthetic(t, t));
  EXPECT_NEAR(fit_polylog(rec).exponent_hat, 1.0, 1e-6);
}

TEST(FitPolylog, InadmissibleRecordsIgnored) {
  std::vector<ExperimentRecord> rec;
  for (int t = 1; t <= 6; ++t) rec.push_back(synthetic(t, 2 * t * t * t));
  const PolylogFit clean = fit_polylog(rec);
  rec.push_back(synthetic(3.5, 999, false));
  const PolylogFit mixed = fit_polylog(rec);
  EXPECT_EQ(clean.c_hat, mixed.c_hat);
  EXPECT_EQ(clean.points, mixed.points);
}

TEST(FitPolylog, InsufficientData) {
  std::vector<ExperimentRecord> rec;
  for (int t = 1; t <= 4; ++t) rec.push_back(synthetic(t, t));
  rec.push_back(synthetic(1, 3));
  EXPECT_THROW_CODE(fit_polylog(rec), InsufficientData);
}
