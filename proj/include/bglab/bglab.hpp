#ifndef BGLAB_BGLAB_HPP
#define BGLAB_BGLAB_HPP

// Umbrella header.

#include "bglab/embeddings.hpp"
#include "bglab/exppoly.hpp"
#include "bglab/genericity.hpp"
#include "bglab/hunt.hpp"
#include "bglab/intlattice.hpp"
#include "bglab/membership.hpp"
#include "bglab/mpoly.hpp"
#include "bglab/multrel.hpp"
#include "bglab/nfmatrix.hpp"
#include "bglab/numberfield.hpp"
#include "bglab/pipeline.hpp"
#include "bglab/rat.hpp"
#include "bglab/ratfunc.hpp"
#include "bglab/solvability.hpp"
#include "bglab/upoly.hpp"
#include "bglab/words.hpp"

#endif
