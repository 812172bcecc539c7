#ifndef FINCAT_FINCAT_HPP_
#define FINCAT_FINCAT_HPP_

// Umbrella header for the whole engine.

#include "fincat/category.hpp"
#include "fincat/cats/abelian.hpp"
#include "fincat/cats/finset.hpp"
#include "fincat/cats/pointed_set.hpp"
#include "fincat/cats/preorder.hpp"
#include "fincat/cats/semilattice.hpp"
#include "fincat/classify.hpp"
#include "fincat/corpus.hpp"
#include "fincat/dsl.hpp"
#include "fincat/envelopes.hpp"
#include "fincat/essentials.hpp"
#include "fincat/fibration.hpp"
#include "fincat/functor.hpp"
#include "fincat/ids.hpp"
#include "fincat/limits.hpp"
#include "fincat/report.hpp"
#include "fincat/spectral.hpp"
#include "fincat/tier.hpp"
#include "fincat/verify.hpp"

#endif  // FINCAT_FINCAT_HPP_
