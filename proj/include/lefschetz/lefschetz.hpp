#pragma once

#include "lefschetz/error.hpp"
#include "lefschetz/exact/bernoulli.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/exact/symbolic.hpp"
#include "lefschetz/finite/brute_force.hpp"
#include "lefschetz/finite/orders.hpp"
#include "lefschetz/formula/adelic.hpp"
#include "lefschetz/formula/genus.hpp"
#include "lefschetz/formula/index.hpp"
#include "lefschetz/formula/lefschetz.hpp"
#include "lefschetz/formula/types.hpp"
#include "lefschetz/nf/arith.hpp"
#include "lefschetz/nf/field.hpp"
#include "lefschetz/nf/zeta.hpp"
#include "lefschetz/quat/algebra.hpp"
