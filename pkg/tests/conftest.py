import pytest

from advisor_match import DEFAULT_SCHEMA, QueryProfile, parse_roster

# The bundled 13-supervisor roster (data/sample_roster.csv keeps a copy on
# disk for the CLI and scripts).
SAMPLE_CSV = (
    "Abdul Hapes bin Mohamed,5,3,3,4,5\n"
    "Ahmad Yusri Dak,4.5,1.5,1.5,1.5,3.5\n"
    "Alif Faisal,5,5,3,3,5\n"
    "Arifah Fasha bt Rosmani,4.5,4.5,2.5,3,3\n"
    "Arzami bin Othman,4,4,1,2,3\n"
    "Dr Ahmad Hanif Baharin,4.5,4.5,3.5,4,4.5\n"
    "Dr Shukor Sanim bin Mohd Fauzi,4,4,4.5,4,4\n"
    "Faris,4,3,4,3.5,4.5\n"
    "Hanisah Ahmad,4,3,1,2,2\n"
    "Hawa bt Mohd Ekhsan,3.5,4,2,3.5,4.5\n"
    "IMAN HAZWAN,3.5,4.5,3,4,4.5\n"
    "Jiwa Noris Hamid,2.5,2,0,0,5\n"
    "Mahfudzah Othman,4,3.5,3.5,3.5,3\n"
)

REFERENCE_RATINGS = [5.0, 4.5, 1.0, 2.5, 3.0]

# Percent scores of the three nearest supervisors for REFERENCE_RATINGS,
# hand-checked from the squared differences:
#   Arzami:        1 + 0.25 + 0 + 0.25 + 0    = 1.5   -> 100 * 1/(1+sqrt(1.5))
#   Arifah Fasha:  0.25 + 0 + 2.25 + 0.25 + 0 = 2.75  -> 100 * 1/(1+sqrt(2.75))
#   Hanisah:       1 + 2.25 + 0 + 0.25 + 1    = 4.5   -> 100 * 1/(1+sqrt(4.5))
REFERENCE_TOP3 = [
    ("Arzami bin Othman", 44.94897427831781),
    ("Arifah Fasha bt Rosmani", 37.61785115301142),
    ("Hanisah Ahmad", 32.03772410170407),
]


@pytest.fixture
def sample_roster():
    return parse_roster(SAMPLE_CSV)


@pytest.fixture
def reference_query():
    return QueryProfile.from_ratings(DEFAULT_SCHEMA, REFERENCE_RATINGS)
