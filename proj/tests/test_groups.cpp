#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "test_support.hpp"

using namespace kas;

namespace {

bool satisfies_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element i = 0; i < n; ++i) {
    if (g.multiply(0, i) != i || g.multiply(i, 0) != i) return false;
    std::set<Element> row, col;
    for (Element j = 0; j < n; ++j) {
      row.insert(g.multiply(i, j));
      col.insert(g.multiply(j, i));
    }
    if (row.size() != n || col.size() != n) return false;
    if (g.multiply(i, g.inverse(i)) != 0 || g.multiply(g.inverse(i), i) != 0) return false;
    for (Element j = 0; j < n; ++j)
      for (Element k = 0; k < n; ++k)
        if (g.multiply(g.multiply(i, j), k) != g.multiply(i, g.multiply(j, k))) return false;
  }
  return true;
}

// S3 acting on three points, conjugated exhaustively without the group table.
std::multiset<std::size_t> s3_class_sizes_by_brute_force() {
  std::vector<Permutation> perms;
  Permutation p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto compose = [](const Permutation& a, const Permutation& b) {
    Permutation c(3);
    for (int x = 0; x < 3; ++x) c[x] = a[b[x]];
    return c;
  };
  auto inverse = [](const Permutation& a) {
    Permutation c(3);
    for (std::uint32_t x = 0; x < 3; ++x) c[a[x]] = x;
    return c;
  };
  std::set<std::set<Permutation>> classes;
  for (const auto& x : perms) {
    std::set<Permutation> cls;
    for (const auto& g : perms) cls.insert(compose(compose(g, x), inverse(g)));
    classes.insert(cls);
  }
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  return sizes;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("group_from_table", "[groups]") {
  const auto trivial = group_from_table({{0}});
  CHECK(trivial.order() == 1);

  const auto c2 = group_from_table({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.inverse(1) == 1);

  try {
    group_from_table({{0, 1}, {1, 1}});
    FAIL("accepted a non-Latin square");
  } catch (const NotAGroupError& e) {
    CHECK(e.kind() == ErrorKind::NotAGroup);
    CHECK(e.witness() == std::array<std::size_t, 3>{1, 1, 1});
  }
}

TEST_CASE("group_from_table relabels the identity to index 0", "[groups]") {
  // Z/3 with the identity stored at index 2.
  const auto g = group_from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, {"a", "b", "e"});
  CHECK(g.labels()[0] == "e");
  CHECK(satisfies_axioms(g));
  CHECK(g.order() == 3);
}

TEST_CASE("group_from_table rejects non-groups", "[groups]") {
  // Latin square with identity 0 that is not associative (order 5 loop).
  const MultiplicationTable loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    group_from_table(loop);
    FAIL("accepted a non-associative table");
  } catch (const NotAGroupError& e) {
    const auto [i, j, k] = e.witness();
    CHECK(loop[loop[i][j]][k] != loop[i][loop[j][k]]);
  }
  // Latin square without an identity.
  CHECK(kind_of([] { group_from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}); }) == ErrorKind::NotAGroup);
  CHECK(kind_of([] { group_from_table({{0, 2}, {1, 0}}); }) == ErrorKind::NotAGroup);
  CHECK(kind_of([] { group_from_table({{0, 1}, {1}}); }) == ErrorKind::NotAGroup);
}

TEST_CASE("standard groups", "[groups]") {
  const auto v4 = standard_group(StandardGroup::product({StandardGroup::cyclic(2), StandardGroup::cyclic(2)}));
  CHECK(v4.order() == 4);
  CHECK(v4.name() == "C2xC2");
  for (Element x = 1; x < 4; ++x) CHECK(element_order(v4, x) == 2);

  const auto s3 = standard_group(StandardGroup::symmetric(3));
  CHECK(s3.order() == 6);
  CHECK(conjugacy_classes(s3).size() == s3_class_sizes_by_brute_force().size());
  CHECK(conjugacy_classes(s3).size() == 3);

  CHECK(standard_group(StandardGroup::cyclic(1)).order() == 1);
  CHECK(dihedral_group(4).order() == 8);
  CHECK_FALSE(dihedral_group(4).is_abelian());
  CHECK(dihedral_group(2).is_abelian());
}

TEST_CASE("every builder satisfies the group axioms", "[groups][property]") {
  for (const auto& g : test::builder_groups(16)) {
    INFO(g.name());
    REQUIRE(satisfies_axioms(g));
    // Re-validating the table goes through the same checks as file input.
    REQUIRE_NOTHROW(group_from_table(g.table()));
  }
}

TEST_CASE("permutation closure", "[groups]") {
  // (1 2) and (1 2 3) generate S3.
  const auto g = permutation_closure({{1, 0, 2}, {1, 2, 0}});
  CHECK(g.order() == 6);
  CHECK(g.labels()[0] == "()");
  CHECK_FALSE(g.is_abelian());
  // Q8 has a unique involution.
  const auto q8 = test::builder_groups(8).back();
  CHECK(q8.name() == "Q8");
  CHECK(q8.order() == 8);
  std::size_t involutions = 0;
  for (Element x = 1; x < 8; ++x) involutions += element_order(q8, x) == 2;
  CHECK(involutions == 1);

  Limits small;
  small.max_group_order = 5;
  CHECK(kind_of([&] { permutation_closure({{1, 0, 2}, {1, 2, 0}}, small); }) == ErrorKind::TooLarge);
}

TEST_CASE("order cap", "[groups]") {
  CHECK(kind_of([] { cyclic_group(65); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] { symmetric_group(5); }) == ErrorKind::TooLarge);
  Limits roomy;
  roomy.max_group_order = 120;
  CHECK(symmetric_group(5, roomy).order() == 120);
  CHECK(kind_of([] { direct_product(cyclic_group(8), cyclic_group(9)); }) == ErrorKind::TooLarge);
}

TEST_CASE("conjugacy classes", "[groups]") {
  const auto c4 = conjugacy_classes(cyclic_group(4));
  CHECK(c4.size() == 4);
  for (const auto& cls : c4.classes) CHECK(cls.size() == 1);

  const auto s3 = conjugacy_classes(symmetric_group(3));
  std::multiset<std::size_t> sizes;
  for (const auto& cls : s3.classes) sizes.insert(cls.size());
  CHECK(sizes == s3_class_sizes_by_brute_force());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

  CHECK(conjugacy_classes(cyclic_group(1)).size() == 1);
}

TEST_CASE("conjugacy class structure on all builders", "[groups][property]") {
  for (const auto& g : test::builder_groups(16)) {
    INFO(g.name());
    const auto cc = conjugacy_classes(g);
    std::vector<Element> all;
    for (std::size_t c = 0; c < cc.size(); ++c) {
      const auto& cls = cc.classes[c];
      REQUIRE(cc.representatives[c] == cls.front());
      all.insert(all.end(), cls.begin(), cls.end());
      for (Element x : cls)
        for (Element h = 0; h < g.order(); ++h)
          REQUIRE(std::binary_search(cls.begin(), cls.end(), g.multiply(g.multiply(h, x), g.inverse(h))));
    }
    std::sort(all.begin(), all.end());
    std::vector<Element> expected(g.order());
    std::iota(expected.begin(), expected.end(), 0);
    REQUIRE(all == expected);
    REQUIRE(cc.classes.front() == std::vector<Element>{0});
    REQUIRE((cc.size() == g.order()) == g.is_abelian());
  }
}

TEST_CASE("element order", "[groups]") {
  CHECK(element_order(cyclic_group(6), 0) == 1);
  CHECK(element_order(cyclic_group(6), 1) == 6);
  const auto s3 = symmetric_group(3);
  // Index 1 is the lexicographically second permutation [0 2 1], a transposition.
  CHECK(s3.labels()[1] == "(2 3)");
  CHECK(element_order(s3, 1) == 2);
  for (const auto& g : test::builder_groups(16))
    for (Element x = 0; x < g.order(); ++x) REQUIRE(g.order() % element_order(g, x) == 0);
}

TEST_CASE("abelianization", "[groups]") {
  CHECK(abelianization(symmetric_group(3)) == FgAbelianGroup::cyclic(2));
  CHECK(commutator_subgroup(symmetric_group(3)).size() == 3);
  CHECK(abelianization(direct_product(cyclic_group(2), cyclic_group(2))) == FgAbelianGroup(0, {2, 2}));
  CHECK(abelianization(dihedral_group(4)) == FgAbelianGroup(0, {2, 2}));
  CHECK(commutator_subgroup(dihedral_group(4)).size() == 2);
  CHECK(abelianization(cyclic_group(12)) == FgAbelianGroup::cyclic(12));
  CHECK(abelianization(cyclic_group(1)).is_trivial());
  // |G^ab| = [G : G'] on every builder.
  for (const auto& g : test::builder_groups(16))
    REQUIRE(*abelianization(g).cardinality() * commutator_subgroup(g).size() == g.order());
}

TEST_CASE("multiplication-table file format", "[groups]") {
  std::istringstream in("3\n0 1 2\n1 2 0\n2 0 1\ne\na\nb\n");
  const auto g = read_table(in);
  CHECK(g.order() == 3);
  CHECK(g.labels() == std::vector<std::string>{"e", "a", "b"});

  std::ostringstream out;
  write_table(out, dihedral_group(3));
  std::istringstream back(out.str());
  const auto d3 = read_table(back);
  CHECK(d3.table() == dihedral_group(3).table());
  CHECK(d3.labels() == dihedral_group(3).labels());

  std::istringstream unlabeled("2\n0 1\n1 0\n");
  CHECK(read_table(unlabeled).order() == 2);

  auto parse_kind = [](const std::string& text) {
    std::istringstream s(text);
    return kind_of([&] { read_table(s); });
  };
  CHECK(parse_kind("") == ErrorKind::ParseError);
  CHECK(parse_kind("x\n") == ErrorKind::ParseError);
  CHECK(parse_kind("2\n0 1\n") == ErrorKind::ParseError);
  CHECK(parse_kind("2\n0 1 1\n1 0\n") == ErrorKind::ParseError);
  CHECK(parse_kind("2\n0 1\n1 0\nonly-one-label\n") == ErrorKind::ParseError);
  CHECK(parse_kind("2\n0 1\n1 1\n") == ErrorKind::NotAGroup);
}
