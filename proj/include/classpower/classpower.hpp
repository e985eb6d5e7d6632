#pragma once

// Umbrella header for the classpower library.

#include "classpower/bigint.hpp"
#include "classpower/catalogue.hpp"
#include "classpower/char_table.hpp"
#include "classpower/class_algebra.hpp"
#include "classpower/conjugacy.hpp"
#include "classpower/criteria.hpp"
#include "classpower/errors.hpp"
#include "classpower/group.hpp"
#include "classpower/group_io.hpp"
#include "classpower/linalg.hpp"
#include "classpower/perm.hpp"
#include "classpower/presentation.hpp"
#include "classpower/report.hpp"
#include "classpower/scan.hpp"
#include "classpower/subgroup.hpp"
