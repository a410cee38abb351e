#pragma once

#include "diwidth/digraph.hpp"
#include "diwidth/enumerate.hpp"
#include "diwidth/exact_width.hpp"
#include "diwidth/expressions.hpp"
#include "diwidth/families.hpp"
#include "diwidth/gf4.hpp"
#include "diwidth/io.hpp"
#include "diwidth/layout.hpp"
#include "diwidth/pathdecomp.hpp"
#include "diwidth/properties.hpp"
#include "diwidth/rankdec.hpp"
#include "diwidth/solve.hpp"
#include "diwidth/threshold.hpp"
#include "diwidth/util.hpp"
