#ifndef UMPQ_UMPQ_HPP
#define UMPQ_UMPQ_HPP

#include "umpq/error.hpp"
#include "umpq/rational.hpp"
#include "umpq/quiver.hpp"
#include "umpq/ideal.hpp"
#include "umpq/format.hpp"
#include "umpq/omega.hpp"
#include "umpq/component_analysis.hpp"
#include "umpq/verdict.hpp"
#include "umpq/oracle.hpp"
#include "umpq/ump.hpp"
#include "umpq/brauer.hpp"
#include "umpq/io.hpp"

#endif
