#ifndef ACTLAB_ACTLAB_HPP_
#define ACTLAB_ACTLAB_HPP_

#include "act.hpp"
#include "classify.hpp"
#include "core.hpp"
#include "corpus_gen.hpp"
#include "cover.hpp"
#include "families.hpp"
#include "formula.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "lazy.hpp"
#include "monoid.hpp"
#include "rect_band.hpp"
#include "regular.hpp"
#include "witness.hpp"

#endif  // ACTLAB_ACTLAB_HPP_
