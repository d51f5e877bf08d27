#pragma once

#include "islands/cnf.hpp"
#include "islands/confined.hpp"
#include "islands/dimacs.hpp"
#include "islands/enumerate.hpp"
#include "islands/extract.hpp"
#include "islands/ordering.hpp"
#include "islands/primal.hpp"
#include "islands/report.hpp"
#include "islands/state.hpp"
