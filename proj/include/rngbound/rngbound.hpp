#pragma once

#include "rngbound/analysis.hpp"
#include "rngbound/codes.hpp"
#include "rngbound/error.hpp"
#include "rngbound/field.hpp"
#include "rngbound/pmf.hpp"
#include "rngbound/report.hpp"
#include "rngbound/transforms.hpp"
