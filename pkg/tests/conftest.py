# keeps this directory importable so test modules can share util.py
