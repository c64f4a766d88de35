#pragma once

// Umbrella header for the algebraic core. The command-line layer lives in
// osg/cli.hpp and additionally needs CLI11 and nlohmann/json.

#include "osg/enumerate.hpp"
#include "osg/error.hpp"
#include "osg/format.hpp"
#include "osg/lemmas.hpp"
#include "osg/ordered_semigroup.hpp"
#include "osg/setalg.hpp"
#include "osg/subset.hpp"
#include "osg/validate.hpp"
