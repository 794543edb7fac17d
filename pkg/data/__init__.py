# Catalogue data and random instance generators
