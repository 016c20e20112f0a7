#pragma once

#include "chainplan/cnf.hpp"
#include "chainplan/errors.hpp"
#include "chainplan/graphs.hpp"
#include "chainplan/model.hpp"
#include "chainplan/oracle.hpp"
#include "chainplan/reduction.hpp"
#include "chainplan/runtime.hpp"
#include "chainplan/symbols.hpp"
#include "chainplan/synthesis.hpp"
#include "chainplan/textio.hpp"
