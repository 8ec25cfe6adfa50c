from enum import Enum

class PermanentMethod(str, Enum):
    NAIVE = "naive"
    RYSER = "ryser"
