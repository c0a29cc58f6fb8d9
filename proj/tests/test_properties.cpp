#include "doctest.h"

#include "properties.hpp"

using namespace qo;

namespace {

const std::vector<props::CorpusEntry>& corpus()
{
    static const auto c = props::load_corpus(QO_CORPUS_DIR);
    return c;
}

std::vector<const Problem*> problems()
{
    std::vector<const Problem*> out;
    for (const auto& e : corpus()) out.push_back(&e.problem);
    return out;
}

void expect(const props::Outcome& o)
{
    INFO(o.name << ": " << o.cases << " cases, " << o.failures << " failures; " << o.first_failure);
    MESSAGE(o.name << ": " << o.cases << " cases");
    CHECK(o.ok());
}

}  // namespace

TEST_CASE("squarefree reconstruction") { expect(props::squarefree_reconstruction()); }
TEST_CASE("resultant multiplicativity") { expect(props::resultant_multiplicativity()); }
TEST_CASE("Newton polytope of a product") { expect(props::newton_polytope_of_product()); }
TEST_CASE("strong triangle inequality") { expect(props::strong_triangle()); }
TEST_CASE("derivative shapes") { expect(props::al_shape()); }
TEST_CASE("power shape of characteristic polynomials") { expect(props::power_shape(problems())); }
TEST_CASE("chain increments") { expect(props::chain_increments(problems())); }
