#ifndef DPS_DPS_HPP_
#define DPS_DPS_HPP_

#include "dps/dps_monoid.hpp"
#include "dps/element_table.hpp"
#include "dps/error.hpp"
#include "dps/generation.hpp"
#include "dps/green.hpp"
#include "dps/partial_map.hpp"
#include "dps/presentation.hpp"
#include "dps/quotient.hpp"
#include "dps/star_metric.hpp"
#include "dps/tietze.hpp"

#endif  // DPS_DPS_HPP_
