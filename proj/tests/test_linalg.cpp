#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "svq/linalg.hpp"

using namespace svq;

TEST_CASE("rref basics") {
  SECTION("identity is its own rref") {
    auto [r, piv] = rref(Mat::identity(3));
    CHECK(r == Mat::identity(3));
    CHECK(piv == std::vector<int>{0, 1, 2});
  }
  SECTION("zero matrix") {
    auto [r, piv] = rref(Mat::zero(2, 2));
    CHECK(r == Mat::zero(2, 2));
    CHECK(piv.empty());
  }
  SECTION("rank-1 2x2") {
    Mat m{{2, 4}, {1, 2}};
    auto [r, piv] = rref(m);
    CHECK(r == Mat{{1, 2}, {0, 0}});
    CHECK(piv == std::vector<int>{0});
  }
}

TEST_CASE("kernel and image") {
  CHECK(kernel_basis(Mat::identity(4)).dim() == 0);
  CHECK(kernel_basis(Mat::zero(1, 3)) == Subspace::full(3));
  Mat m{{1, -1}};
  Subspace k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.basis() == Mat{{1}, {1}});
  CHECK(image_basis(Mat::identity(2)) == Subspace::full(2));
  CHECK(image_basis(Mat::zero(2, 2)).dim() == 0);
  Mat col{{1}, {1}};
  CHECK(image_basis(col).basis() == col);
}

TEST_CASE("kernel properties on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = int(rng() % 7) - 3;
    Subspace k = kernel_basis(m);
    CHECK(rank(m) + k.dim() == c);
    if (k.dim() > 0) CHECK((m * k.basis()).is_zero());
  }
}

TEST_CASE("solve") {
  SECTION("identity") {
    Mat b{{2}, {-3}};
    auto s = solve(Mat::identity(2), b);
    REQUIRE(s);
    CHECK(s->particular == b);
    CHECK(s->kernel.dim() == 0);
  }
  SECTION("inconsistent") {
    Mat b{{1}};
    CHECK(!solve(Mat::zero(1, 2), b));
  }
  SECTION("underdetermined") {
    Mat m{{1, 1}};
    Mat b{{2}};
    auto s = solve(m, b);
    REQUIRE(s);
    CHECK(s->particular == Mat{{2}, {0}});
    REQUIRE(s->kernel.dim() == 1);
    CHECK(s->kernel.basis() == Mat{{1}, {-1}});
  }
  SECTION("dimension mismatch is a contract violation") {
    CHECK_THROWS_AS(solve(Mat::zero(2, 2), Mat{{1}}), std::invalid_argument);
  }
}

TEST_CASE("annihilator") {
  CHECK(annihilator(Subspace(2)) == Subspace::full(2));
  CHECK(annihilator(Subspace::full(2)).dim() == 0);
  Mat v{{1}, {1}};
  Subspace ann = annihilator(Subspace::from_columns(v));
  REQUIRE(ann.dim() == 1);
  CHECK(ann.basis() == Mat{{1}, {-1}});
}

TEST_CASE("annihilator is involutive") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + int(rng() % 5), k = int(rng() % (n + 1));
    Mat cols(n, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) cols.at(i, j) = int(rng() % 5) - 2;
    Subspace s = Subspace::from_columns(cols);
    CHECK(annihilator(annihilator(s)) == s);
  }
}

TEST_CASE("quotient_reps") {
  CHECK(quotient_reps(Subspace::full(2), Subspace(2)) == Subspace::full(2));
  Subspace s = Subspace::from_columns(Mat{{1, 0}, {0, 1}, {1, 1}});
  CHECK(quotient_reps(s, s).dim() == 0);
  Subspace e1 = Subspace::from_columns(Mat{{1}, {0}});
  Subspace q = quotient_reps(Subspace::full(2), e1);
  REQUIRE(q.dim() == 1);
  CHECK(q.basis().at(1, 0) != 0);
  SECTION("im must sit inside ker") {
    CHECK_THROWS_AS(quotient_reps(e1, Subspace::from_columns(Mat{{0}, {1}})),
                    std::invalid_argument);
  }
  SECTION("reps are independent modulo im") {
    Subspace big = Subspace::from_columns(Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    Subspace small = Subspace::from_columns(Mat{{1}, {1}, {0}});
    Subspace reps = quotient_reps(big, small);
    CHECK(reps.dim() == big.dim() - small.dim());
    CHECK(big.contains(reps.basis()));
    CHECK(rank(hstack({small.basis(), reps.basis()})) == big.dim());
  }
}

TEST_CASE("fiber_product") {
  SECTION("diagonal") {
    Subspace fp = fiber_product(Mat::identity(1), Mat::identity(1));
    CHECK(fp.basis() == Mat{{1}, {1}});
  }
  SECTION("zero against id") {
    Subspace fp = fiber_product(Mat::zero(1, 1), Mat::identity(1));
    CHECK(fp.basis() == Mat{{1}, {0}});
  }
  SECTION("sum map against id") {
    Mat f{{1, 1}};
    Subspace fp = fiber_product(f, Mat::identity(1));
    REQUIRE(fp.dim() == 2);
    for (int j = 0; j < 2; ++j) {
      Mat col = fp.basis().col(j);
      CHECK(col.at(0, 0) + col.at(1, 0) == col.at(2, 0));
    }
  }
  SECTION("graph of f when g = id") {
    Mat f{{2, -1}, {0, 3}};
    Subspace fp = fiber_product(f, Mat::identity(2));
    REQUIRE(fp.dim() == 2);
    Mat a = fp.basis().block(0, 0, 2, 2);
    Mat b = fp.basis().block(2, 0, 2, 2);
    CHECK(f * a == b);
  }
  SECTION("codomain mismatch") {
    CHECK_THROWS_AS(fiber_product(Mat::zero(1, 1), Mat::zero(2, 1)), std::invalid_argument);
  }
}

TEST_CASE("subspace coords") {
  Subspace s = Subspace::from_columns(Mat{{1, 0}, {1, 1}, {0, 2}});
  Mat v = s.basis() * Mat{{3}, {-2}};
  CHECK(s.coords(v) == Mat{{3}, {-2}});
  Mat out{{1}, {0}, {0}};
  CHECK(!s.contains(out));
}

TEST_CASE("vec helpers") {
  Mat p{{1, 2}, {3, 4}};
  Mat g{{5, 6, 7}, {8, 9, 10}};
  Mat q{{1, 0}, {0, 2}, {1, 1}};
  CHECK(vec_rowmajor(p * g * q) == kron(p, q.transpose()) * vec_rowmajor(g));
  CHECK(unvec_rowmajor(vec_rowmajor(g), 2, 3) == g);
}
