#pragma once

// Umbrella header.

#include "cobweb/bignum.hpp"
#include "cobweb/fsequence.hpp"
#include "cobweb/hyperbox.hpp"
#include "cobweb/incidence.hpp"
#include "cobweb/io.hpp"
#include "cobweb/join.hpp"
#include "cobweb/matrix.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/relations.hpp"
#include "cobweb/structure.hpp"
