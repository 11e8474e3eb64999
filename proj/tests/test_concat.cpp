#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "brauer/algebra.hpp"
#include "brauer/concat.hpp"
#include "brauer/sampling.hpp"
#include "oracles.hpp"

using namespace brauer;

namespace {

ColoredDiagram e1_diagram(int n) {
  std::vector<RawStrand> raw{{top(1), top(2), 0}, {bottom(1), bottom(2), 0}};
  for (int k = 3; k <= n; ++k) raw.push_back({top(k), bottom(k), 0});
  return make_diagram(n, raw);
}

}  // namespace

TEST_CASE("identity laws") {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 5;
    const ColoredDiagram d = random_diagram(rng, n, 4);
    const ColoredDiagram id = identity_diagram(n);
    const ConcatResult left = concatenate(id, d);
    const ConcatResult right = concatenate(d, id);
    CHECK(left.diagram == d);
    CHECK(left.loop_labels.empty());
    CHECK(right.diagram == d);
    CHECK(right.loop_labels.empty());
  }
}

TEST_CASE("loop extraction on cap-cup squares") {
  const ColoredDiagram e1 = e1_diagram(2);
  const ConcatResult square = concatenate(e1, e1);
  CHECK(square.diagram == e1);
  CHECK(square.loop_labels == std::vector<Label>{0});

  // Insert a labeled vertical strand between the two: the loop picks up
  // its label.
  const ColoredDiagram t1_sq =
      make_diagram(2, {{top(1), bottom(1), 2}, {top(2), bottom(2), 0}});
  const ConcatResult mid = concatenate(concatenate(e1, t1_sq).diagram, e1);
  CHECK(mid.diagram == e1);
  CHECK(mid.loop_labels == std::vector<Label>{2});
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(concatenate(identity_diagram(2), identity_diagram(3)),
                  DimensionMismatch);
}

TEST_CASE("loop coefficients depend only on the magnitude") {
  CHECK(loop_coefficient(0) == delta(0));
  CHECK(loop_coefficient(-3) == delta(3));
  CHECK(loop_coefficient(3) == delta(3));
}

TEST_CASE("orientation of the inputs does not affect the result") {
  // Reverse every raw strand of both operands (negating labels): the
  // canonical representatives are identical, so the product must be too.
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const ColoredDiagram x = random_diagram(rng, n, 4);
    const ColoredDiagram y = random_diagram(rng, n, 4);
    auto reversed = [](const ColoredDiagram& d) {
      std::vector<RawStrand> raw;
      for (const Strand& s : d.strands()) raw.push_back({s.hi, s.lo, -s.label});
      return make_diagram(d.n(), raw);
    };
    const ConcatResult a = concatenate(x, y);
    const ConcatResult b = concatenate(reversed(x), reversed(y));
    CHECK(a.diagram == b.diagram);
    CHECK(a.loop_labels == b.loop_labels);
  }
}

TEST_CASE("through count never increases") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 5;
    const ColoredDiagram x = random_diagram(rng, n, 3);
    const ColoredDiagram y = random_diagram(rng, n, 3);
    const ConcatResult r = concatenate(x, y);
    CHECK(r.diagram.through_count() <=
          std::min(x.through_count(), y.through_count()));
  }
}

TEST_CASE("open-strand labels match the name-based tracer") {
  Rng rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 3;
    const ColoredDiagram x = random_diagram(rng, n, 4);
    const ColoredDiagram y = random_diagram(rng, n, 4);
    const ConcatResult r = concatenate(x, y);

    // The oracle walks by node names; bring both to canonical form for
    // comparison.
    std::map<std::string, Label> expected;
    for (const oracles::TracedStrand& t : oracles::trace_oracle(x, y)) {
      const Node from = Node::parse(t.from);
      const Node to = Node::parse(t.to);
      if (from < to)
        expected[from.str() + "-" + to.str()] = t.label;
      else
        expected[to.str() + "-" + from.str()] = -t.label;
    }
    CHECK(expected.size() == r.diagram.strands().size());
    for (const Strand& s : r.diagram.strands()) {
      const auto it = expected.find(s.lo.str() + "-" + s.hi.str());
      REQUIRE(it != expected.end());
      CHECK(it->second == s.label);
    }
  }
}

TEST_CASE("label-free products agree with the union-find oracle") {
  // Exhaustive over all flat pairs for n <= 3, plus the coefficient rule
  // delta_0 per loop through classical_multiply.
  for (int n = 1; n <= 3; ++n) {
    const auto all = enumerate_flat(n);
    for (const ColoredDiagram& x : all) {
      for (const ColoredDiagram& y : all) {
        const ConcatResult r = concatenate(x, y);
        const oracles::FlatProduct expected = oracles::flat_product_oracle(
            oracles::partner_array(x), oracles::partner_array(y), n);
        CHECK(oracles::partner_array(r.diagram) == expected.partner);
        CHECK(static_cast<int>(r.loop_labels.size()) == expected.loops);
        for (Label l : r.loop_labels) CHECK(l == 0);

        const AlgebraElement product = classical_multiply(
            AlgebraElement::from_diagram(x), AlgebraElement::from_diagram(y));
        RingElem coeff(1);
        for (int i = 0; i < expected.loops; ++i) coeff *= delta(0);
        AlgebraElement want(n);
        want.add_term(r.diagram, coeff);
        CHECK(product == want);
      }
    }
  }
}
