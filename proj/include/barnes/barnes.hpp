#pragma once

// Umbrella header.

#include "barnes/barnes_g.hpp"
#include "barnes/clausen.hpp"
#include "barnes/constants.hpp"
#include "barnes/context.hpp"
#include "barnes/exact.hpp"
#include "barnes/gamma.hpp"
#include "barnes/glaisher.hpp"
#include "barnes/io.hpp"
#include "barnes/mpreal.hpp"
#include "barnes/multigamma.hpp"
#include "barnes/quadrature.hpp"
#include "barnes/report.hpp"
#include "barnes/verify.hpp"
#include "barnes/zeta.hpp"
