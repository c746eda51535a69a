#pragma once

#include "bruhat/bitset.hpp"
#include "bruhat/census.hpp"
#include "bruhat/classify.hpp"
#include "bruhat/hasse.hpp"
#include "bruhat/isomorphism.hpp"
#include "bruhat/lattice.hpp"
#include "bruhat/order.hpp"
#include "bruhat/patterns.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/poset.hpp"
#include "bruhat/words.hpp"
