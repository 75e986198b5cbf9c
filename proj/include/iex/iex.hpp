#pragma once

#include "iex/core.hpp"
#include "iex/errors.hpp"
#include "iex/generators.hpp"
#include "iex/index_set.hpp"
#include "iex/json_io.hpp"
#include "iex/mobius.hpp"
#include "iex/projective.hpp"
#include "iex/q_binomial.hpp"
#include "iex/standardize.hpp"
#include "iex/tube.hpp"
#include "iex/validate.hpp"
