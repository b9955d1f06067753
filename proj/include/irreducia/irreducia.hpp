#pragma once

#include "irreducia/analysis.hpp"
#include "irreducia/audit.hpp"
#include "irreducia/corpus.hpp"
#include "irreducia/criteria.hpp"
#include "irreducia/error.hpp"
#include "irreducia/io.hpp"
#include "irreducia/numutil.hpp"
#include "irreducia/oracle.hpp"
#include "irreducia/polynomial.hpp"
#include "irreducia/report.hpp"
#include "irreducia/rootloc.hpp"
