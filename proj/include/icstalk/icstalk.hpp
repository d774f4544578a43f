#pragma once

#include "icstalk/bott.hpp"
#include "icstalk/combinatorics.hpp"
#include "icstalk/errors.hpp"
#include "icstalk/json_io.hpp"
#include "icstalk/linalg.hpp"
#include "icstalk/matrix.hpp"
#include "icstalk/monodromy.hpp"
#include "icstalk/points.hpp"
#include "icstalk/rational.hpp"
#include "icstalk/reproduction.hpp"
