#pragma once

#include "idemcore/base.hpp"

namespace idemcore {

// Every exhaustive algorithm is gated by an explicit budget; exceeding one
// raises BudgetError, never a silent truncation.
struct Budgets {
    // fincat enumeration ops (reflective subcategories, monad morphism search)
    int max_cat_objects = 8;
    int max_cat_morphisms = 40;
    // exhaustive monad enumeration
    int max_monad_enum_morphisms = 24;

    // presheaf bases and carriers
    int max_base_objects = 3;
    int max_base_morphisms = 8;
    int max_carrier = 4;
    // projected element count per object for exponentials / hom-set enumeration
    long long max_expo_cells = 10000;
    long long max_homset = 200000;

    // lttop sweeps
    int lt_sweep_bound = 3;

    // double-dualization monad: full law checking vs eta-only construction
    int dd_full_carrier = 2;
    int dd_full_base_objects = 2;
    long long dd_expo_cells = 200000;
    int dd_eta_carrier = 3;

    Json to_json() const {
        return Json{{"max_cat_objects", max_cat_objects},
                    {"max_cat_morphisms", max_cat_morphisms},
                    {"max_monad_enum_morphisms", max_monad_enum_morphisms},
                    {"max_base_objects", max_base_objects},
                    {"max_base_morphisms", max_base_morphisms},
                    {"max_carrier", max_carrier},
                    {"max_expo_cells", max_expo_cells},
                    {"max_homset", max_homset},
                    {"lt_sweep_bound", lt_sweep_bound},
                    {"dd_full_carrier", dd_full_carrier},
                    {"dd_full_base_objects", dd_full_base_objects},
                    {"dd_expo_cells", dd_expo_cells},
                    {"dd_eta_carrier", dd_eta_carrier}};
    }
};

}  // namespace idemcore
