#pragma once

#include "lowcross/approx.hpp"
#include "lowcross/bounds.hpp"
#include "lowcross/candidate_edges.hpp"
#include "lowcross/discrepancy.hpp"
#include "lowcross/errors.hpp"
#include "lowcross/geometry.hpp"
#include "lowcross/matching.hpp"
#include "lowcross/params.hpp"
#include "lowcross/presample.hpp"
#include "lowcross/set_system.hpp"
#include "lowcross/subset_sampling.hpp"
#include "lowcross/testkit.hpp"
#include "lowcross/types.hpp"
#include "lowcross/weighted_index.hpp"
