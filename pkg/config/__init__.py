# Configuration Package 
