#pragma once

#include "fll/anticodes.hpp"
#include "fll/average.hpp"
#include "fll/balls.hpp"
#include "fll/codes.hpp"
#include "fll/errors.hpp"
#include "fll/extremal.hpp"
#include "fll/lcs.hpp"
#include "fll/parallel.hpp"
#include "fll/report.hpp"
#include "fll/spheres.hpp"
#include "fll/suites.hpp"
#include "fll/word.hpp"
