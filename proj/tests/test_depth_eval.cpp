/*
 * Copyright 2026 The saves-bench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "saves/depth_eval.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "saves/error.hpp"
#include "test_support.hpp"

namespace saves {
namespace {

DepthMap RowMap(const std::vector<double>& values) {
  DepthMap map(static_cast<int>(values.size()), 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    map.Set(static_cast<int>(i), 0, values[i]);
  }
  return map;
}

// Naive per-pixel loop oracle, independent of the library implementation.
struct OracleMetrics {
  double abs_rel = 0, sq_rel = 0, rmse = 0, irmse = 0;
  std::size_t count = 0;
};

OracleMetrics NaiveMetrics(const DepthMap& pred, const DepthMap& gt,
                           const DepthEvalConfig& cfg) {
  OracleMetrics m;
  double abs_rel = 0, sq_rel = 0, sq = 0, inv_sq = 0;
  for (int y = 0; y < gt.height(); ++y) {
    for (int x = 0; x < gt.width(); ++x) {
      if (!pred.IsValid(x, y) || !gt.IsValid(x, y)) continue;
      const double g = gt.ValueAt(x, y);
      if (g < cfg.min_depth || g > cfg.max_depth) continue;
      double d = pred.ValueAt(x, y);
      if (cfg.clamp_pred) d = std::clamp(d, cfg.min_depth, cfg.max_depth);
      abs_rel += std::abs(d - g) / g;
      sq_rel += (d - g) * (d - g) / g;
      sq += (d - g) * (d - g);
      inv_sq += (1000.0 / g - 1000.0 / d) * (1000.0 / g - 1000.0 / d);
      ++m.count;
    }
  }
  const double n = static_cast<double>(m.count);
  m.abs_rel = abs_rel / n;
  m.sq_rel = sq_rel / n;
  m.rmse = std::sqrt(sq / n);
  m.irmse = std::sqrt(inv_sq / n);
  return m;
}

TEST_CASE("resize interpolates linearly with align-corners mapping") {
  const DepthMap src = RowMap({1.0, 3.0});
  const DepthMap out = ResizeDepth(src, 3, 1);
  REQUIRE(out.width() == 3);
  CHECK(out.ValueAt(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.ValueAt(1, 0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(out.ValueAt(2, 0) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("identity resize returns an equal map") {
  std::mt19937_64 rng(61);
  const DepthMap map = testing::RandomDepthMap(rng, 13, 7, 1.0, 90.0, 0.8);
  const DepthMap out = ResizeDepth(map, 13, 7);
  CHECK(out.values() == map.values());
  CHECK(out.valid() == map.valid());
}

TEST_CASE("invalid corners poison exactly the pixels they contribute to") {
  // 2x2 source with one invalid corner upsampled to 3x3. The contribution
  // set of each target pixel is enumerated here as the oracle.
  DepthMap src(2, 2);
  src.Set(0, 0, 10.0);
  src.Set(1, 0, 20.0);
  src.Set(0, 1, 30.0);
  // (1,1) invalid
  const DepthMap out = ResizeDepth(src, 3, 3);

  for (int ty = 0; ty < 3; ++ty) {
    for (int tx = 0; tx < 3; ++tx) {
      const double sx = tx * 0.5;
      const double sy = ty * 0.5;
      bool expect_valid = true;
      for (int j = 0; j < 2 && expect_valid; ++j) {
        for (int i = 0; i < 2; ++i) {
          const double wx = i == 0 ? 1.0 - (sx - std::floor(sx))
                                   : sx - std::floor(sx);
          const double wy = j == 0 ? 1.0 - (sy - std::floor(sy))
                                   : sy - std::floor(sy);
          const int px = static_cast<int>(std::floor(sx)) + i;
          const int py = static_cast<int>(std::floor(sy)) + j;
          if (wx * wy <= 0.0 || px > 1 || py > 1) continue;
          if (px == 1 && py == 1) expect_valid = false;
        }
      }
      CHECK(out.IsValid(tx, ty) == expect_valid);
    }
  }
  // Corner pixels map exactly onto the sources.
  CHECK(out.ValueAt(0, 0) == 10.0);
  CHECK(out.ValueAt(2, 0) == 20.0);
  CHECK(out.ValueAt(0, 2) == 30.0);
  CHECK_FALSE(out.IsValid(2, 2));
}

TEST_CASE("resize rejects bad targets") {
  const DepthMap src = RowMap({1.0});
  CHECK_THROWS_AS(ResizeDepth(src, 0, 3), Error);
}

TEST_CASE("scale match on the ratio fixture") {
  const DepthMap pred = RowMap({1, 2, 4});
  const DepthMap gt = RowMap({2, 4, 8});
  const ScaleMatchResult result = ScaleMatch(pred, gt, 1e-3, 80.0);
  CHECK(result.scale == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(result.scaled.ValueAt(0, 0) == doctest::Approx(2.0));
  CHECK(result.scaled.ValueAt(1, 0) == doctest::Approx(4.0));
  CHECK(result.scaled.ValueAt(2, 0) == doctest::Approx(8.0));
}

TEST_CASE("scale match of a map against itself is unity") {
  std::mt19937_64 rng(62);
  const DepthMap map = testing::RandomDepthMap(rng, 16, 16, 1.0, 70.0, 0.9);
  const ScaleMatchResult result = ScaleMatch(map, map, 1e-3, 80.0);
  CHECK(result.scale == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.scaled.values() == map.values());
}

TEST_CASE("scale match medians agree and re-matching is idempotent") {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 50; ++i) {
    const DepthMap gt = testing::RandomDepthMap(rng, 16, 16, 0.5, 100.0, 0.8);
    DepthMap pred = testing::RandomDepthMap(rng, 16, 16, 0.5, 100.0, 0.8);
    try {
      const ScaleMatchResult matched = ScaleMatch(pred, gt, 1e-3, 80.0);

      // median(y*) == median(gt) over the joint mask.
      std::vector<double> scaled_masked, gt_masked;
      for (int y = 0; y < 16; ++y) {
        for (int x = 0; x < 16; ++x) {
          if (!pred.IsValid(x, y) || !gt.IsValid(x, y)) continue;
          const double g = gt.ValueAt(x, y);
          if (g < 1e-3 || g > 80.0) continue;
          scaled_masked.push_back(matched.scaled.ValueAt(x, y));
          gt_masked.push_back(g);
        }
      }
      std::sort(scaled_masked.begin(), scaled_masked.end());
      std::sort(gt_masked.begin(), gt_masked.end());
      const double median_scaled =
          scaled_masked[(scaled_masked.size() - 1) / 2];
      const double median_gt = gt_masked[(gt_masked.size() - 1) / 2];
      CHECK(median_scaled ==
            doctest::Approx(median_gt).epsilon(1e-9));

      const ScaleMatchResult again = ScaleMatch(matched.scaled, gt, 1e-3, 80.0);
      CHECK(again.scale == doctest::Approx(1.0).epsilon(1e-9));
    } catch (const Error&) {
      // Sparse random masks may not overlap; that case is covered below.
    }
  }
}

TEST_CASE("scale match error paths") {
  DepthMap pred(2, 1);
  DepthMap gt(2, 1);
  // No overlap: pred valid only at 0, gt valid only at 1.
  pred.Set(0, 0, 1.0);
  gt.Set(1, 0, 1.0);
  CHECK_THROWS_WITH_AS(ScaleMatch(pred, gt, 1e-3, 80.0),
                       "no overlapping valid pixels", Error);

  // All gt beyond max_depth is equally empty.
  DepthMap far_gt(2, 1);
  far_gt.Set(0, 0, 90.0);
  DepthMap pred2(2, 1);
  pred2.Set(0, 0, 1.0);
  CHECK_THROWS_WITH_AS(ScaleMatch(pred2, far_gt, 1e-3, 80.0),
                       "no overlapping valid pixels", Error);

  const DepthMap a = RowMap({1.0});
  DepthMap b(2, 1);
  CHECK_THROWS_AS(ScaleMatch(a, b, 1e-3, 80.0), Error);
}

TEST_CASE("metrics on the three-pixel fixture match the scalar oracle") {
  const DepthMap pred = RowMap({2, 2, 2});
  const DepthMap gt = RowMap({1, 2, 3});
  const DepthMetrics m = ComputeDepthMetrics(pred, gt, DepthEvalConfig{});
  CHECK(m.abs_error_rel == doctest::Approx(0.4444).epsilon(1e-4));
  CHECK(m.sq_error_rel == doctest::Approx(0.4444).epsilon(1e-4));
  CHECK(m.irmse == doctest::Approx(304.29).epsilon(1e-4));
  CHECK(m.rmse == doctest::Approx(0.8165).epsilon(1e-4));
  CHECK(m.valid_pixel_count == 3);

  const OracleMetrics oracle = NaiveMetrics(pred, gt, DepthEvalConfig{});
  CHECK(m.abs_error_rel == doctest::Approx(oracle.abs_rel).epsilon(1e-12));
  CHECK(m.sq_error_rel == doctest::Approx(oracle.sq_rel).epsilon(1e-12));
  CHECK(m.irmse == doctest::Approx(oracle.irmse).epsilon(1e-12));
  CHECK(m.rmse == doctest::Approx(oracle.rmse).epsilon(1e-12));
}

TEST_CASE("equal maps score zero on every metric") {
  std::mt19937_64 rng(64);
  const DepthMap map = testing::RandomDepthMap(rng, 16, 16, 1.0, 75.0, 0.9);
  const DepthMetrics m = ComputeDepthMetrics(map, map, DepthEvalConfig{});
  CHECK(m.abs_error_rel == 0.0);
  CHECK(m.sq_error_rel == 0.0);
  CHECK(m.irmse == 0.0);
  CHECK(m.rmse == 0.0);
}

TEST_CASE("gt beyond max_depth is excluded from the mask") {
  DepthMap gt(2, 1);
  gt.Set(0, 0, 80.1);
  gt.Set(1, 0, 40.0);
  DepthMap pred(2, 1);
  pred.Set(0, 0, 10.0);
  pred.Set(1, 0, 40.0);
  const DepthMetrics m = ComputeDepthMetrics(pred, gt, DepthEvalConfig{});
  CHECK(m.valid_pixel_count == 1);  // only the 40 m pixel
  CHECK(m.rmse == 0.0);
}

TEST_CASE("metrics match the naive oracle on random maps") {
  std::mt19937_64 rng(65);
  DepthEvalConfig cfg;
  for (int i = 0; i < 100; ++i) {
    const DepthMap gt = testing::RandomDepthMap(rng, 16, 16, 0.5, 100.0, 0.9);
    const DepthMap pred =
        testing::RandomDepthMap(rng, 16, 16, 0.5, 120.0, 0.9);
    try {
      const DepthMetrics m = ComputeDepthMetrics(pred, gt, cfg);
      const OracleMetrics oracle = NaiveMetrics(pred, gt, cfg);
      CHECK(m.valid_pixel_count == oracle.count);
      CHECK(std::abs(m.abs_error_rel - oracle.abs_rel) < 1e-9);
      CHECK(std::abs(m.sq_error_rel - oracle.sq_rel) < 1e-9);
      CHECK(std::abs(m.rmse - oracle.rmse) < 1e-9);
      CHECK(std::abs(m.irmse - oracle.irmse) < 1e-9);
    } catch (const Error&) {
    }
  }
}

TEST_CASE("metrics are invariant under joint permutation") {
  std::mt19937_64 rng(66);
  const int n = 64;
  std::vector<double> pred_values(n), gt_values(n);
  std::uniform_real_distribution<double> depth(1.0, 79.0);
  for (int i = 0; i < n; ++i) {
    pred_values[i] = depth(rng);
    gt_values[i] = depth(rng);
  }
  auto make_maps = [&](const std::vector<int>& order) {
    DepthMap pred(8, 8);
    DepthMap gt(8, 8);
    for (int i = 0; i < n; ++i) {
      pred.Set(i % 8, i / 8, pred_values[order[i]]);
      gt.Set(i % 8, i / 8, gt_values[order[i]]);
    }
    return std::make_pair(pred, gt);
  };
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  const auto [pred_a, gt_a] = make_maps(order);
  std::shuffle(order.begin(), order.end(), rng);
  const auto [pred_b, gt_b] = make_maps(order);

  const DepthMetrics a = ComputeDepthMetrics(pred_a, gt_a, DepthEvalConfig{});
  const DepthMetrics b = ComputeDepthMetrics(pred_b, gt_b, DepthEvalConfig{});
  CHECK(a.abs_error_rel == doctest::Approx(b.abs_error_rel).epsilon(1e-12));
  CHECK(a.sq_error_rel == doctest::Approx(b.sq_error_rel).epsilon(1e-12));
  CHECK(a.rmse == doctest::Approx(b.rmse).epsilon(1e-12));
  CHECK(a.irmse == doctest::Approx(b.irmse).epsilon(1e-12));
}

TEST_CASE("prediction clamping is a config switch") {
  DepthMap gt(1, 1);
  gt.Set(0, 0, 79.0);
  DepthMap pred(1, 1);
  pred.Set(0, 0, 200.0);

  DepthEvalConfig clamped;  // default on
  const DepthMetrics with_clamp = ComputeDepthMetrics(pred, gt, clamped);
  CHECK(with_clamp.rmse == doctest::Approx(1.0).epsilon(1e-12));

  DepthEvalConfig raw;
  raw.clamp_pred = false;
  const DepthMetrics no_clamp = ComputeDepthMetrics(pred, gt, raw);
  CHECK(no_clamp.rmse == doctest::Approx(121.0).epsilon(1e-12));
}

TEST_CASE("config validation") {
  DepthEvalConfig cfg;
  cfg.min_depth = 0.0;
  CHECK_THROWS_AS(cfg.Validate(), Error);
  cfg.min_depth = 90.0;
  cfg.max_depth = 80.0;
  CHECK_THROWS_AS(cfg.Validate(), Error);
}

}  // namespace
}  // namespace saves
