# To run, go up one directory and run python -m unittest discover
