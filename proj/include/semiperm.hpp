#pragma once

#include "semiperm/bitset.hpp"
#include "semiperm/classes.hpp"
#include "semiperm/corpus.hpp"
#include "semiperm/element_table.hpp"
#include "semiperm/errors.hpp"
#include "semiperm/group.hpp"
#include "semiperm/group_file.hpp"
#include "semiperm/p_groups.hpp"
#include "semiperm/perm.hpp"
#include "semiperm/permutability.hpp"
#include "semiperm/quotient.hpp"
#include "semiperm/report.hpp"
#include "semiperm/subgroups.hpp"
#include "semiperm/theorem_lab.hpp"
