#pragma once

#include "obf/capacity.hpp"
#include "obf/empirical.hpp"
#include "obf/grid.hpp"
#include "obf/mc.hpp"
#include "obf/outage.hpp"
#include "obf/pathloss.hpp"
#include "obf/quadrature.hpp"
#include "obf/report.hpp"
#include "obf/rootfind.hpp"
#include "obf/specfun.hpp"
#include "obf/system.hpp"
#include "obf/validation.hpp"
#include "obf/version.hpp"
