from dotenv import load_dotenv
import os

load_dotenv()

# search bounds (vertex counts)
AUTOMORPHISM_SEARCH_BOUND = int(os.environ.get("AUTOMORPHISM_SEARCH_BOUND", 10))
ENDOMORPHISM_SEARCH_BOUND = int(os.environ.get("ENDOMORPHISM_SEARCH_BOUND", 7))
HEREDITARY_SEARCH_BOUND = int(os.environ.get("HEREDITARY_SEARCH_BOUND", 10))

# fraenkel bounds (atom counts)
LEAST_SUPPORT_BOUND = int(os.environ.get("LEAST_SUPPORT_BOUND", 8))
FRAENKEL_LEMMA_BOUND = int(os.environ.get("FRAENKEL_LEMMA_BOUND", 6))
# every union of orbit classes is checked, so a support costs 2 ** classes
FRAENKEL_ORBIT_CLASS_BOUND = int(os.environ.get("FRAENKEL_ORBIT_CLASS_BOUND", 30))

# census bounds
CENSUS_LABELED_BOUND = int(os.environ.get("CENSUS_LABELED_BOUND", 4))
CENSUS_ISOMORPH_BOUND = int(os.environ.get("CENSUS_ISOMORPH_BOUND", 5))
STRONG_EXAMPLES_BOUND = int(os.environ.get("STRONG_EXAMPLES_BOUND", 5))
NON_HEREDITARY_EXAMPLES_BOUND = int(os.environ.get("NON_HEREDITARY_EXAMPLES_BOUND", 4))
GRAPH_CENSUS_BOUND = int(os.environ.get("GRAPH_CENSUS_BOUND", 5))

WORKERS = int(os.environ.get("WORKERS", 1))

LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")
LOG_FILE = os.environ.get("LOG_FILE", "logs/rigidity.log")
