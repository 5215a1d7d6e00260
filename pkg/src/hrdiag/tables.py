"""Bundled survey data and the canonical questionnaire factor catalog.

The two data tables are per-respondent aggregate scores (strategic,
tactical, operational), already averaged from the 33-factor
questionnaire, as collected in the original telecom-sector survey this
library reproduces.  They ship inside the package so the whole pipeline
runs with zero external files.  Outcome labels were never published for
these respondents; see ``assign_surrogate_targets`` in :mod:`hrdiag.data`.

Factor identifiers are snake-case and authoritative: CSV questionnaire
input must use exactly these ids.  The grouping (10 strategic, 14
tactical, 9 operational) and the ordering are fixed.
"""

from __future__ import annotations

# Training split: 52 respondents, columns (label, strategic, tactical, operational).
EMBEDDED_TRAINING: tuple[tuple[str, float, float, float], ...] = (
    ("Emp1", 1.0, 2.0, 1.0),
    ("Emp2", 2.0, 3.0, 1.9),
    ("Emp3", 4.0, 1.5, 1.5),
    ("Emp4", 2.0, 3.0, 4.0),
    ("Emp5", 1.7, 1.6, 2.5),
    ("Emp6", 1.0, 1.0, 1.0),
    ("Emp7", 1.2, 1.3, 1.4),
    ("Emp8", 1.7, 1.8, 3.0),
    ("Emp9", 1.8, 2.0, 4.0),
    ("Emp10", 4.0, 1.8, 2.0),
    ("Emp11", 2.0, 5.0, 1.0),
    ("Emp12", 2.5, 2.2, 2.0),
    ("Emp13", 2.5, 2.0, 1.6),
    ("Emp14", 1.6, 2.0, 2.5),
    ("Emp15", 1.0, -1.0, 1.0),
    ("Emp16", -1.0, -1.0, 1.0),
    ("Emp17", -1.0, 1.0, -1.0),
    ("Emp18", 1.0, 1.0, -1.0),
    ("Emp19", 1.2, -1.0, 1.0),
    ("Emp20", -1.0, 1.2, 1.5),
    ("Emp21", 3.6, 1.2, 4.0),
    ("Emp22", 3.6, 3.6, 3.6),
    ("Emp23", 4.0, 4.0, 5.0),
    ("Emp24", 5.0, 4.0, 2.0),
    ("Emp25", 5.0, 5.0, 1.0),
    ("Emp26", 4.0, 5.0, -1.0),
    ("Emp27", 3.0, 2.0, -1.0),
    ("Emp28", 0.5, 1.5, 0.5),
    ("Emp29", 2.1, 3.1, 4.1),
    ("Emp30", 5.0, 5.0, 5.0),
    ("Emp31", 0.1, 0.2, 0.5),
    ("Emp32", 0.5, 0.7, 1.5),
    ("Emp33", 4.1, 4.2, 4.3),
    ("Emp34", 5.0, 0.1, 0.2),
    ("Emp35", 0.1, 2.0, 0.1),
    ("Emp36", 1.4, 5.0, -1.0),
    ("Emp37", 1.5, 4.0, 1.0),
    ("Emp38", 1.6, 3.0, 2.0),
    ("Emp39", 2.1, 2.0, 3.0),
    ("Emp40", 2.1, 1.0, 4.0),
    ("Emp41", 2.3, 5.0, 5.0),
    ("Emp42", 2.5, 4.0, -1.0),
    ("Emp43", 3.3, 3.0, 1.0),
    ("Emp44", 3.5, 2.0, 2.0),
    ("Emp45", 4.0, 1.0, 3.0),
    ("Emp46", 4.9, 5.0, 4.0),
    ("Emp47", 4.1, 4.0, 5.0),
    ("Emp48", 4.3, 3.0, -1.0),
    ("Emp49", 3.01, 2.0, -1.0),
    ("Emp50", 2.01, -1.0, 1.0),
    ("Emp51", 2.03, 5.0, 1.0),
    ("Emp52", 5.0, 4.0, 1.0),
)

# Testing split: 23 respondents.
EMBEDDED_TESTING: tuple[tuple[str, float, float, float], ...] = (
    ("Empt1", 1.3, 1.2, 1.1),
    ("Empt2", 1.5, 1.5, 1.5),
    ("Empt3", 1.7, 1.5, 1.6),
    ("Empt4", 2.0, 1.0, 0.0),
    ("Empt5", 3.0, 2.0, 2.0),
    ("Empt6", 1.6, 1.6, 1.6),
    ("Empt7", 4.0, 1.0, 2.0),
    ("Empt8", 1.0, 4.0, 1.6),
    ("Empt9", 2.0, 4.0, 4.0),
    ("Empt10", 3.3, 3.1, 3.4),
    ("Empt11", 2.5, 3.5, 2.0),
    ("Empt12", 4.1, 3.5, 2.1),
    ("Empt13", 1.0, 1.0, 1.0),
    ("Empt14", 1.3, 1.1, 1.9),
    ("Empt15", 1.8, 2.3, 2.1),
    ("Empt16", 0.0, 0.0, 0.0),
    ("Empt17", 0.0, 1.0, 0.0),
    ("Empt18", 0.0, 0.0, 1.0),
    ("Empt19", 3.5, 4.5, 5.0),
    ("Empt20", 1.8, 1.6, 2.9),
    ("Empt21", 1.0, 0.0, 0.0),
    ("Empt22", 2.5, 1.0, 1.0),
    ("Empt23", 3.5, 1.6, 1.7),
)

# Questionnaire factors, in canonical order.  Scores are five-point
# Likert importance ratings (1 = not important ... 5 = most important).
STRATEGIC_FACTORS: tuple[str, ...] = (
    "top_management_support",
    "team_working_relationship",
    "leadership",
    "clear_project_goals",
    "business_environment_understanding",
    "user_involvement_in_development",
    "attitude_towards_risk",
    "computer_facility_adequacy",
    "technology_focus",
    "project_over_commitment",
)

TACTICAL_FACTORS: tuple[str, ...] = (
    "communication",
    "organizational_politics",
    "resource_allocation_priority",
    "organizational_culture",
    "skilled_resources",
    "information_reliability",
    "return_on_investment",
    "user_requirements_realization",
    "data_security",
    "documentation",
    "cost_benefit_balance",
    "user_training",
    "system_flexibility",
    "system_testing",
)

OPERATIONAL_FACTORS: tuple[str, ...] = (
    "professional_standard_maintenance",
    "staff_response_to_change",
    "staff_trust_in_change",
    "input_output_handling",
    "output_accuracy",
    "information_completeness",
    "interaction_language",
    "output_volume",
    "user_faith_in_technology",
)

ALL_FACTORS: tuple[str, ...] = STRATEGIC_FACTORS + TACTICAL_FACTORS + OPERATIONAL_FACTORS

FACTOR_GROUPS: dict[str, tuple[str, ...]] = {
    "strategic": STRATEGIC_FACTORS,
    "tactical": TACTICAL_FACTORS,
    "operational": OPERATIONAL_FACTORS,
}
