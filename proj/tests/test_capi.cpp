#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "kpart/kpart.h"

namespace {

std::string take(char* text) {
  std::string copy = text ? text : "";
  kp_string_free(text);
  return copy;
}

}  // namespace

TEST_CASE("status names and argument checks") {
  CHECK(std::strcmp(kp_status_name(KP_OK), "ok") == 0);
  CHECK(std::strcmp(kp_status_name(KP_ERR_PARSE), "parse error") == 0);
  kp_pointset* out = nullptr;
  CHECK(kp_pointset_gen_convex(6, 0, nullptr) == KP_ERR_INVALID_ARGUMENT);
  CHECK(kp_pointset_create(nullptr, 3, &out) == KP_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(std::strlen(kp_last_error()) > 0);
}

TEST_CASE("point set handles") {
  const int64_t xy[] = {0, 0, 4, 0, 1, 3};
  kp_pointset* tri = nullptr;
  REQUIRE(kp_pointset_create(xy, 3, &tri) == KP_OK);
  CHECK(kp_pointset_size(tri) == 3);
  int64_t x = 0, y = 0;
  CHECK(kp_pointset_point(tri, 2, &x, &y) == KP_OK);
  CHECK(x == 1);
  CHECK(y == 3);
  CHECK(kp_pointset_point(tri, 3, &x, &y) == KP_ERR_INVALID_ARGUMENT);
  kp_pointset_report report{};
  int order[3];
  CHECK(kp_pointset_validate(tri, &report, order) == KP_OK);
  CHECK(report.general_position == 1);
  CHECK(report.convex_position == 1);
  char* text = nullptr;
  CHECK(kp_pointset_write(tri, &text) == KP_OK);
  CHECK(take(text) == "3\n0 0\n4 0\n1 3\n");
  kp_pointset_free(tri);

  const int64_t collinear[] = {0, 0, 1, 1, 2, 2};
  kp_pointset* bad = nullptr;
  CHECK(kp_pointset_create(collinear, 3, &bad) == KP_ERR_INVALID_INPUT);
  CHECK(std::string(kp_last_error()).find("collinear") != std::string::npos);
  CHECK(kp_pointset_parse("3\n0 0\n1 z\n", &bad) == KP_ERR_PARSE);
  CHECK(bad == nullptr);
  kp_pointset_free(nullptr);
}

TEST_CASE("crossing family and halving partition through the C API") {
  kp_pointset* pts = nullptr;
  REQUIRE(kp_pointset_gen_crossing_family(5, 3, &pts) == KP_OK);
  CHECK(kp_pointset_size(pts) == 10);
  CHECK(kp_pointset_family_size(pts) == 5);
  size_t m = 0;
  int proven = 0;
  std::vector<int> uv(20);
  CHECK(kp_max_crossing_family(pts, 0, &m, &proven, uv.data()) == KP_OK);
  CHECK(m == 5);
  CHECK(proven == 1);

  kp_coloring* col = nullptr;
  REQUIRE(kp_partition_halving(pts, 3, &col) == KP_OK);
  CHECK(kp_coloring_num_colors(col) == 3);
  int ok = 0, color = -2;
  size_t wsize = 0;
  CHECK(kp_verify_k_quasi_planar(pts, col, 3, 0, &ok, &color, nullptr, 0, &wsize) == KP_OK);
  CHECK(ok == 1);
  CHECK(color == -1);
  CHECK(kp_verify_partition(pts, col, &ok) == KP_OK);
  CHECK(ok == 1);
  kp_coloring_free(col);

  kp_theorem7_report report{};
  REQUIRE(kp_partition_theorem7(pts, 4, 0, &col, &report) == KP_OK);
  CHECK(report.m == 5);
  CHECK(report.colors_used == 2);
  kp_coloring_free(col);

  kp_pointset* plain = nullptr;
  REQUIRE(kp_pointset_gen_random(10, 3, &plain) == KP_OK);
  CHECK(kp_partition_halving(plain, 3, &col) == KP_ERR_INVALID_INPUT);
  REQUIRE(kp_partition_double_star(plain, &col) == KP_OK);
  int bad = 0;
  CHECK(kp_verify_spanning_trees(col, &ok, &bad) == KP_OK);
  CHECK(ok == 1);
  CHECK(bad == -1);
  kp_coloring_free(col);
  kp_pointset_free(plain);
  kp_pointset_free(pts);
}

TEST_CASE("slope partition and verifiers through the C API") {
  kp_coloring* col = nullptr;
  REQUIRE(kp_partition_slope(12, 3, &col) == KP_OK);
  CHECK(kp_coloring_n(col) == 12);
  CHECK(kp_coloring_num_colors(col) == 4);
  kp_kplanar_result res{};
  CHECK(kp_verify_k_planar(nullptr, col, 1, &res) == KP_OK);
  CHECK(res.ok == 1);
  CHECK(res.max_crossings == 1);
  CHECK(kp_verify_k_planar(nullptr, col, 0, &res) == KP_OK);
  CHECK(res.ok == 0);
  CHECK(res.color >= 0);
  CHECK(res.crossings == 1);

  char* text = nullptr;
  REQUIRE(kp_coloring_write(col, &text) == KP_OK);
  kp_coloring* back = nullptr;
  CHECK(kp_coloring_parse(text, &back) == KP_OK);
  char* again = nullptr;
  CHECK(kp_coloring_write(back, &again) == KP_OK);
  CHECK(take(text) == take(again));

  char* svg = nullptr;
  CHECK(kp_render_svg(nullptr, back, nullptr, &svg) == KP_OK);
  CHECK(take(svg).find("<svg") != std::string::npos);
  kp_coloring_free(back);
  kp_coloring_free(col);

  REQUIRE(kp_coloring_create(6, 1, &col) == KP_OK);
  int c = 0;
  CHECK(kp_coloring_get(col, 0, 1, &c) == KP_OK);
  CHECK(c == -1);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) REQUIRE(kp_coloring_set(col, u, v, 0) == KP_OK);
  CHECK(kp_coloring_set(col, 0, 0, 0) == KP_ERR_INVALID_ARGUMENT);
  CHECK(kp_coloring_set(col, 0, 1, 5) == KP_ERR_INVALID_ARGUMENT);
  int ok = 1, color = -1;
  int uv[6];
  size_t wsize = 0;
  CHECK(kp_verify_k_quasi_planar(nullptr, col, 3, 0, &ok, &color, uv, 3, &wsize) == KP_OK);
  CHECK(ok == 0);
  CHECK(wsize == 3);
  CHECK(uv[0] == 0);
  CHECK(uv[1] == 3);
  CHECK(uv[2] == 1);
  CHECK(uv[3] == 4);
  CHECK(uv[4] == 2);
  CHECK(uv[5] == 5);
  kp_coloring_free(col);
}

TEST_CASE("bounds through the C API") {
  int64_t num = 0, den = 0;
  CHECK(kp_edge_bound_small_k(5, 1, &num, &den) == KP_OK);
  CHECK(num == 17);
  CHECK(den == 2);
  CHECK(kp_edge_bound_small_k(5, 7, &num, &den) == KP_ERR_INVALID_INPUT);
  double value = 0;
  CHECK(kp_edge_bound_general(100, 5, &value) == KP_OK);
  CHECK(value == doctest::Approx(551.13).epsilon(1e-5));
  CHECK(kp_crossing_lemma_bound(12, 53, &value) == KP_ERR_INVALID_INPUT);
  CHECK(kp_peeling_bound(12, 66) == 175);
  const int k4[] = {0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3};
  size_t cr = 0;
  CHECK(kp_count_crossings(nullptr, 4, k4, 6, &cr) == KP_OK);
  CHECK(cr == 1);
  size_t size = 0;
  int proven = 0;
  CHECK(kp_max_k_plane_subgraph(5, 1, 0, &size, &proven) == KP_OK);
  CHECK(size == 8);
  CHECK(proven == 1);
  CHECK(kp_choose_block_size(1) == 3);
  size_t lower = 0, upper = 0;
  CHECK(kp_kplanar_color_bounds(100, 1, &lower, &upper) == KP_OK);
  CHECK(lower == 21);
  CHECK(upper == 34);
  CHECK(kp_one_planar_lower_bound(4, &lower) == KP_ERR_INVALID_INPUT);
  int single = 0;
  CHECK(kp_quasi_color_bounds(20, 6, 4, &lower, &upper, &single) == KP_OK);
  CHECK(lower == 2);
  CHECK(upper == 5);
  char* table = nullptr;
  int all = 0;
  CHECK(kp_bounds_report(7, 2, nullptr, 0, &table, &all) == KP_OK);
  CHECK(all == 1);
  CHECK(take(table).rfind("BOUND ", 0) == 0);
}
