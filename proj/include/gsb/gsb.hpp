#pragma once

#include "gsb/core/alphabet.hpp"
#include "gsb/core/errors.hpp"
#include "gsb/core/graded_span.hpp"
#include "gsb/core/linalg.hpp"
#include "gsb/core/linear_combination.hpp"
#include "gsb/core/polynomial.hpp"
#include "gsb/core/scalar.hpp"
#include "gsb/core/word.hpp"

#include "gsb/rewrite/normal_form.hpp"
#include "gsb/rewrite/rewrite_system.hpp"

#include "gsb/composition/cd_lemma.hpp"
#include "gsb/composition/completion.hpp"
#include "gsb/composition/compositions.hpp"

#include "gsb/dialgebra/di_system.hpp"
#include "gsb/dialgebra/diword.hpp"
#include "gsb/dialgebra/leibniz.hpp"

#include "gsb/module/module_system.hpp"
#include "gsb/module/module_word.hpp"

#include "gsb/ac/ac_system.hpp"
#include "gsb/ac/ac_word.hpp"
#include "gsb/ac/lyndon.hpp"

#include "gsb/catalog/chinese.hpp"
#include "gsb/catalog/presentation.hpp"
#include "gsb/catalog/tensor.hpp"

#include "gsb/io/parser.hpp"
#include "gsb/io/printer.hpp"
