#include "tropsym/fixtures.hpp"

#include "tropsym/errors.hpp"

namespace tropsym::fixtures {

ModelPtr interval() {
  return share(Model::create({{"a", 0}, {"b", 0}}, {{"e", "a", "b", Rational(1)}}));
}

ModelPtr circle() {
  return share(Model::create({{"a", 0}, {"b", 0}},
                             {{"e", "a", "b", Rational(1)},
                              {"f", "b", "a", Rational(1)}}));
}

ModelPtr dumbbell_with_loops() {
  return share(Model::create({{"x", 0}, {"y", 0}},
                             {{"a", "x", "x", Rational(2)},
                              {"b", "x", "y", Rational(1)},
                              {"c", "y", "y", Rational(2)}}));
}

ModelPtr dumbbell() {
  // Same ids and order as make_loop_free(dumbbell_with_loops()), but a root.
  return share(Model::create({{"x", 0}, {"y", 0}, {"a.mid", 0}, {"c.mid", 0}},
                             {{"a.a", "x", "a.mid", Rational(1)},
                              {"a.b", "a.mid", "x", Rational(1)},
                              {"b", "x", "y", Rational(1)},
                              {"c.a", "y", "c.mid", Rational(1)},
                              {"c.b", "c.mid", "y", Rational(1)}}));
}

ChainOfLoopsSpec chain_g2_spec() {
  return {{Rational(1), Rational(1)}, {Rational(3), Rational(4)}, {}};
}

ChainOfLoopsSpec chain_g3_spec() {
  return {{Rational(1), Rational(1), Rational(1)},
          {Rational(3, 2), Rational(5, 2), Rational(7, 2)},
          {}};
}

ModelPtr chain_g2() { return share(chain_of_loops(chain_g2_spec())); }
ModelPtr chain_g3() { return share(chain_of_loops(chain_g3_spec())); }

std::vector<Named> all() {
  return {{"interval", interval()},
          {"circle", circle()},
          {"dumbbell", dumbbell()},
          {"chain_g2", chain_g2()},
          {"chain_g3", chain_g3()}};
}

ModelPtr by_name(std::string_view name) {
  for (auto& f : all()) {
    if (f.name == name) return f.model;
  }
  throw DomainError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace tropsym::fixtures
