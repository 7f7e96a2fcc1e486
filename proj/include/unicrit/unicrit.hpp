#pragma once

#include "unicrit/arith.hpp"
#include "unicrit/audit.hpp"
#include "unicrit/bigint.hpp"
#include "unicrit/certify.hpp"
#include "unicrit/classify.hpp"
#include "unicrit/cli.hpp"
#include "unicrit/curves.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/factor.hpp"
#include "unicrit/json_io.hpp"
#include "unicrit/modp.hpp"
#include "unicrit/parallel.hpp"
#include "unicrit/proportion.hpp"
#include "unicrit/semigroup.hpp"
#include "unicrit/text.hpp"
