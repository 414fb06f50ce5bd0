import os
from typing import Optional
import logging
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict

# Load environment variables
load_dotenv()

LOG_LEVEL = os.getenv("COVERIDEAL_LOG_LEVEL", "WARNING").upper()

logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
logging.getLogger("coverideal_lab").setLevel(LOG_LEVEL)

# Resource caps
CAP_LATTICE = int(os.getenv("COVERIDEAL_CAP_LATTICE", "200000"))
CAP_MATRIX = int(os.getenv("COVERIDEAL_CAP_MATRIX", "4000"))
CAP_AMBIENT = int(os.getenv("COVERIDEAL_CAP_AMBIENT", "10"))
CAP_GENERATORS = int(os.getenv("COVERIDEAL_CAP_GENERATORS", "5000"))
CAP_CYCLE_VERTICES = int(os.getenv("COVERIDEAL_CAP_CYCLE_VERTICES", "14"))
CAP_SCAN_VERTICES = int(os.getenv("COVERIDEAL_CAP_SCAN_VERTICES", "8"))

JOBS = int(os.getenv("COVERIDEAL_JOBS", "1"))


class Caps(BaseModel):
    """Resource limits shared by the exhaustive computations."""

    lattice: int = CAP_LATTICE
    matrix: int = CAP_MATRIX
    ambient: int = CAP_AMBIENT
    generators: int = CAP_GENERATORS
    cycle_vertices: int = CAP_CYCLE_VERTICES
    scan_vertices: int = CAP_SCAN_VERTICES
    jobs: int = JOBS

    model_config = ConfigDict(frozen=True)


DEFAULT_CAPS = Caps()


def get_caps(caps: Optional[Caps] = None) -> Caps:
    """
    Resolve an optional caps argument.

    Args:
        caps: Caps passed by the caller, or None

    Returns:
        The given caps, or the environment defaults
    """
    return caps if caps is not None else DEFAULT_CAPS
